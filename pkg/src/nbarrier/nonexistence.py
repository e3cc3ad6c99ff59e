"""Decision procedure for blocking three-species waves with an invading third.

Two independent criteria rule out a positive wave profile for the
three-species degenerate system.  Case (i) bounds the first two species away
from zero after discounting the third's ceiling, and blocks when the
resulting weighted floor already exceeds the third's growth rate.  Case (ii)
caps the first two species and blocks when the third's equation cannot dip
below the level its boundary data would need.  Both reuse the two-species
m = 2 closed forms with the third row's competition coefficients as weights.

Hypotheses about the (hypothetical) profile itself, its positivity and
boundary limits and interior minimum, cannot be computed from parameters;
they are recorded as caller-asserted flags.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import two_species_m2_lower, two_species_m2_upper


@dataclass(frozen=True)
class ThreeSpeciesParams:
    """Parameters of the three-species system, plus optional boundary data
    w_minus_inf / w_plus_inf for the third species (case ii only)."""

    d: tuple
    sigma: tuple
    C: tuple
    w_minus_inf: float | None = None
    w_plus_inf: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "C", tuple(tuple(row) for row in self.C))
        if len(self.d) != 3 or len(self.sigma) != 3 or len(self.C) != 3:
            raise ValueError("three species means three of everything")
        if any(len(row) != 3 for row in self.C):
            raise ValueError("competition matrix must be 3x3")
        if any(v <= 0 for v in self.d) or any(v <= 0 for v in self.sigma):
            raise ValueError("d and sigma must be strictly positive")
        if any(c <= 0 for row in self.C for c in row):
            raise ValueError("competition coefficients must be strictly positive")
        for name, w in (("w_minus_inf", self.w_minus_inf),
                        ("w_plus_inf", self.w_plus_inf)):
            if w is not None and w < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class CaseIVerdict:
    """Floor-based blocking: applicable when both discounted rates are positive."""

    applicable: bool
    phi1: float
    phi2: float
    ulow_star: float | None
    vlow_star: float | None
    lambda_star: float | None
    blocked: bool
    profile_hypotheses_asserted: bool

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "phi1": self.phi1,
            "phi2": self.phi2,
            "ulow_star": self.ulow_star,
            "vlow_star": self.vlow_star,
            "lambda_star": self.lambda_star,
            "blocked": self.blocked,
            "profile_hypotheses_asserted": self.profile_hypotheses_asserted,
        }


@dataclass(frozen=True)
class CaseIIVerdict:
    """Cap-based blocking: needs boundary data for the third species.

    conclusive is False when neither boundary value was supplied; blocked is
    then False by construction, not a finding.
    """

    applicable: bool
    ubar_star: float
    vbar_star: float
    lambda_star_upper: float
    threshold: float | None
    blocked: bool
    conclusive: bool
    profile_hypotheses_asserted: bool

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "ubar_star": self.ubar_star,
            "vbar_star": self.vbar_star,
            "lambda_star_upper": self.lambda_star_upper,
            "threshold": self.threshold,
            "blocked": self.blocked,
            "conclusive": self.conclusive,
            "profile_hypotheses_asserted": self.profile_hypotheses_asserted,
        }


@dataclass(frozen=True)
class NonexistenceVerdict:
    case_i: CaseIVerdict
    case_ii: CaseIIVerdict

    def to_dict(self) -> dict:
        return {"case_i": self.case_i.to_dict(), "case_ii": self.case_ii.to_dict()}


def check_case_i(params: ThreeSpeciesParams,
                 assume_profile_hypotheses: bool = True) -> CaseIVerdict:
    """Evaluate the floor criterion.

    phi_i discount the first two growth rates by the third species' ceiling
    sigma3/c33.  Both must be strictly positive (a tie fails); then the
    intercept floors u*, v* feed the two-species m = 2 lower closed form with
    weights (c31, c32), and the wave is blocked when that floor level already
    reaches sigma3.
    """
    (d1, d2, _), (s1, s2, s3), C = params.d, params.sigma, params.C
    phi1 = s1 - C[0][2] * s3 / C[2][2]
    phi2 = s2 - C[1][2] * s3 / C[2][2]
    if not (phi1 > 0 and phi2 > 0):
        return CaseIVerdict(applicable=False, phi1=phi1, phi2=phi2,
                            ulow_star=None, vlow_star=None, lambda_star=None,
                            blocked=False,
                            profile_hypotheses_asserted=assume_profile_hypotheses)
    ulow_star = min(phi1 / C[0][0], phi2 / C[1][0])
    vlow_star = min(phi1 / C[0][1], phi2 / C[1][1])
    lambda_star = two_species_m2_lower(C[2][0], C[2][1], d1, d2,
                                       ulow_star, vlow_star)
    return CaseIVerdict(applicable=True, phi1=phi1, phi2=phi2,
                        ulow_star=ulow_star, vlow_star=vlow_star,
                        lambda_star=lambda_star, blocked=lambda_star >= s3,
                        profile_hypotheses_asserted=assume_profile_hypotheses)


def check_case_ii(params: ThreeSpeciesParams,
                  assume_profile_hypotheses: bool = True) -> CaseIIVerdict:
    """Evaluate the cap criterion.

    The intercept caps u*, v* feed the two-species m = 2 upper closed form
    with weights (c31, c32).  Applicable when that cap level stays below
    sigma3; blocked additionally needs a supplied boundary value of the third
    species below (sigma3 - cap)/c33.  With neither boundary value given the
    verdict is inconclusive rather than an error.
    """
    (d1, d2, _), (s1, s2, s3), C = params.d, params.sigma, params.C
    ubar_star = max(s1 / C[0][0], s2 / C[1][0])
    vbar_star = max(s1 / C[0][1], s2 / C[1][1])
    lam_upper = two_species_m2_upper(C[2][0], C[2][1], d1, d2,
                                     ubar_star, vbar_star)
    applicable = lam_upper < s3
    threshold = (s3 - lam_upper) / C[2][2] if applicable else None
    supplied = [w for w in (params.w_minus_inf, params.w_plus_inf) if w is not None]
    conclusive = bool(supplied)
    blocked = bool(applicable and supplied and min(supplied) < threshold)
    return CaseIIVerdict(applicable=applicable, ubar_star=ubar_star,
                         vbar_star=vbar_star, lambda_star_upper=lam_upper,
                         threshold=threshold, blocked=blocked,
                         conclusive=conclusive,
                         profile_hypotheses_asserted=assume_profile_hypotheses)


def check(params: ThreeSpeciesParams,
          assume_profile_hypotheses: bool = True) -> NonexistenceVerdict:
    """Run both criteria and bundle the verdicts."""
    return NonexistenceVerdict(
        case_i=check_case_i(params, assume_profile_hypotheses),
        case_ii=check_case_ii(params, assume_profile_hypotheses))


def params_from_dict(doc: dict) -> ThreeSpeciesParams:
    """Build parameters from a JSON document with keys d, sigma, C and
    optional w_minus_inf / w_plus_inf."""
    try:
        d = tuple(float(x) for x in doc["d"])
        sigma = tuple(float(x) for x in doc["sigma"])
        C = tuple(tuple(float(x) for x in row) for row in doc["C"])
    except KeyError as exc:
        raise ValueError(f"parameter document is missing key {exc.args[0]!r}") from exc
    w_minus = doc.get("w_minus_inf")
    w_plus = doc.get("w_plus_inf")
    return ThreeSpeciesParams(
        d=d, sigma=sigma, C=C,
        w_minus_inf=None if w_minus is None else float(w_minus),
        w_plus_inf=None if w_plus is None else float(w_plus))
