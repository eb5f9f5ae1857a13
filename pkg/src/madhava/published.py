"""Published reference values used for verification and table reproduction."""

from __future__ import annotations

from fractions import Fraction

# sthaulya I_k(p) closed forms, orders 1..5
STHAULYA_CLOSED_FORMS = {
    1: "1/(p^3-p)",
    2: "-4/(p^5+4p)",
    3: "36/(p^7+7p^5+28p^3-36p)",
    4: "-576/(p^9+24p^7+192p^5-64p^3+576p)",
    5: "14400/(p^11+55p^9+968p^7+3520p^5+9856p^3-14400p)",
}

# factorisations of the sthaulya denominators D_k(p)
DENOMINATOR_FACTORS = {
    1: ["p", "p-1", "p+1"],
    2: ["p", "p^2-2p+2", "p^2+2p+2"],
    3: ["p-1", "p", "p+1", "p^2-2p+6", "p^2+2p+6"],
    4: ["p", "p^4-4p^3+20p^2-32p+24", "p^4+4p^3+20p^2+32p+24"],
    5: ["p-1", "p", "p+1", "p^4-4p^3+36p^2-64p+120", "p^4+4p^3+36p^2+64p+120"],
    6: ["p", "p^2-2p+10", "p^2+2p+10", "p^4-4p^3+52p^2-96p+72", "p^4+4p^3+52p^2+96p+72"],
    7: [
        "p-1",
        "p",
        "p+1",
        "p^6-6p^5+106p^4-384p^3+2080p^2-3408p+5040",
        "p^6+6p^5+106p^4+384p^3+2080p^2+3408p+5040",
    ],
}

# truncated series plus third correction term, value of pi (15 decimals)
TABLE1 = {
    5: "3.141587301587302",
    6: "3.141594274480180",
    10: "3.141592705349155",
    11: "3.141592626657870",
    20: "3.141592654019864",
    21: "3.141592653283544",
    30: "3.141592653615266",
    31: "3.141592653569532",
}

# errors E, E1, E2, E3 as printed; "0.0" marks a saturated entry
TABLE2 = {
    10: ("0.0997530", "-2.4696534e-4", "2.4112190e-6", "-5.1759362e-8"),
    11: ("-0.0907231", "1.8593504e-4", "-1.5063313e-6", "2.6931923e-8"),
    100: ("0.0099998", "-2.4996876e-7", "2.4990676e-11", "-5.7731597e-15"),
    101: ("-0.0099007", "2.4261781e-7", "-2.3777869e-11", "5.3290705e-15"),
    1000: ("9.9999975e-4", "-2.5000002e-10", "0.0", "0.0"),
    1001: ("-9.9900075e-4", "2.4925084e-10", "-4.4408921e-16", "0.0"),
    10000: ("9.9999999e-5", "-2.5002223e-13", "0.0", "0.0"),
    10001: ("-9.9990001e-5", "2.5002223e-13", "0.0", "0.0"),
}

# nested quotients of S(n) under the two assumed values of pi, n = 1..5
HAYASHI_355_113 = {
    "S": ["97/452", "161/1356", "551/6780", "2923/47460", "21153/427140"],
    "quotients": [[4, 8, 12, 16, 20], [1, 2, 3, 4, 5], [1, 2, 3, 4, 5]],
    "remainders": [
        ["64/97", "68/161", "168/551", "692/2923", "4080/21153"],
        ["33/64", "25/68", "47/168", "155/692", "753/4080"],
        ["31/33", "18/25", "27/47", "72/155", "315/753"],
    ],
}
HAYASHI_62832_20000 = {
    "S": ["1073/5000", "1781/15000", "1219/15000", "6467/105000", "15599/315000"],
    "quotients": [[4, 8, 12, 16, 20], [1, 2, 3, 4, 5], [1, 2, 3, 4, 6]],
    "final_remainders": ["343/365", "198/277", "63/103", "108/355", "26/499"],
}


def displayed_value(text: str) -> tuple[Fraction, Fraction]:
    """Value of a printed decimal and half a unit in its last printed digit."""
    mant, _, exp = text.lower().partition("e")
    exp_i = int(exp) if exp else 0
    frac_digits = len(mant.split(".")[1]) if "." in mant else 0
    value = Fraction(mant) * Fraction(10) ** exp_i
    half_unit = Fraction(1, 2) * Fraction(10) ** (exp_i - frac_digits)
    return value, half_unit


def is_saturated(text: str) -> bool:
    return Fraction(text) == 0


def displayed_matches(exact, text: str) -> bool:
    """True when ``text`` is a correct rounding of ``exact`` at its printed precision."""
    value, half_unit = displayed_value(text)
    return abs(Fraction(exact) - value) <= half_unit


SATURATION_LIMIT = Fraction(5, 10**16)
