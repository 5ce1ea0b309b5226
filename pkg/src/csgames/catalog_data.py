"""Literal coefficient tables for the known counting quasi-polynomials.

Each table lists the coefficients of one quasi-polynomial from the highest
power of n down to the constant term.  An entry is either a single rational
string (period 1) or a tuple of rational strings (one per residue class of
n, the class ``n % q == 0`` first).  Keeping the catalog in one flat data
module makes transcription errors local and diffable; ``CHECKSUM`` pins the
exact content and is verified by the test suite.

``zero_upto``: the count is identically zero for n up to that value, which
overlaps the range where the polynomial form is claimed valid; agreement on
the overlap is checked empirically, not assumed.
"""

from __future__ import annotations

import hashlib
import json

Entry = str | tuple[str, ...]

QUASI_TABLES: dict[str, dict] = {
    # games with 3 voter classes and 2 winning rows; degree 8, period 2
    "cs_32": {
        "zero_upto": 3,
        "min_n": 2,
        "coefficients": [
            "1/26880",
            "13/20160",
            "-1/2880",
            "-43/5760",
            "-1/2880",
            "23/1440",
            "23/5040",
            ("1/70", "-41/4480"),
            ("0/1", "-1/256"),
        ],
    },
    # 3 classes, 3 rows; degree 11, period 6
    "cs_33": {
        "zero_upto": 4,
        "min_n": 2,
        "coefficients": [
            "23/239500800",
            "139/87091200",
            "257/52254720",
            "-107/1161216",
            "871/14515200",
            "1177/1555200",
            "-1571/1088640",
            "-5/6804",
            ("1429/302400", "21289/4838400"),
            ("-401/151200", "16861/9676800"),
            ("-1/3080", "-10393/2365440"),
            (
                "0/1",
                "-451/1492992",
                "-4/729",
                "5/2048",
                "-2/729",
                "-4547/1492992",
            ),
        ],
    },
    # 3 classes, 4 rows; degree 14, period 6
    "cs_34": {
        "zero_upto": 5,
        "min_n": 2,
        "coefficients": [
            "2833/16738231910400",
            "913/391283343360",
            "-25733/3310859059200",
            "-8329/41385738240",
            "-104849/300987187200",
            "434377/30098718720",
            "-3853/85730400",
            "-56471/752467968",
            "10222451/18811699200",
            ("-103807/209018880", "-1628593/3344302080"),
            ("-3612949/2874009600", "-418954397/367873228800"),
            ("3217/1451520", "33517/23224320"),
            (
                "-913147/1816214400",
                "484043734439/301288174387200",
                "-29120107/147113366400",
                "5408921719/3719607091200",
                "-51542507/147113366400",
                "529964809639/301288174387200",
            ),
            (
                "-197/144144",
                "-719771827/478235197440",
                "80611/105080976",
                "-16985027/5904138240",
                "59/11675664",
                "-3197869643/4304116776960",
            ),
            (
                "0/1",
                "-306295/859963392",
                "-2/729",
                "233/131072",
                "-14/6561",
                "-92287/95551488",
            ),
        ],
    },
    # 4 classes, 2 rows; degree 11, period 2
    "cs_42": {
        "zero_upto": 4,
        "min_n": 2,
        "coefficients": [
            "29/319334400",
            "197/58060800",
            "67/3870720",
            "-793/3870720",
            "-341/9676800",
            "667/345600",
            "-73/45360",
            "-2791/725760",
            "2683/604800",
            ("-41/12600", "37283/6451200"),
            ("53/9240", "-13289/4730880"),
            ("0/1", "-15/4096"),
        ],
    },
    # 4 classes, 3 rows; degree 15, period 12
    "cs_43": {
        "zero_upto": 4,
        "min_n": 2,
        "coefficients": [
            "40441/1506440871936000",
            "227/190749081600",
            "55447/2459495301120",
            "731/5748019200",
            "-2450159/3678732288000",
            "-494953/66886041600",
            "9002453/316036546560",
            "-4213/8670412800",
            "-36098869/188116992000",
            ("623521/836075520", "9976903/13377208320"),
            ("-63029/574801920", "-16678043/147149291520"),
            ("-1341127/479001600", "-157994831/61312204800"),
            ("5098711/18162144000", "-34324686997/37196070912000"),
            ("12701/46569600", "716763911/190749081600"),
            (
                "1711/720720",
                "1108675/1721646710784",
                "3809879/525404880",
                "-5037829/2361655296",
                "2368439/525404880",
                "4724419267/1721646710784",
            ),
            (
                "0/1",
                "-3711109/5159780352",
                "21277/20155392",
                "-631/262144",
                "14/19683",
                "3104635/5159780352",
                "-1/1024",
                "-8749957/5159780352",
                "40/19683",
                "-375/262144",
                "-5347/20155392",
                "-1934213/5159780352",
            ),
        ],
    },
    # 5 classes, 2 rows; degree 14, period 2
    "cs_52": {
        "zero_upto": 5,
        "min_n": 2,
        "coefficients": [
            "1/10729635840",
            "587/99632332800",
            "1/12773376",
            "-4511/7664025600",
            "-9491/1393459200",
            "25643/464486400",
            "-10519/195084288",
            "-81367/174182400",
            "169/134400",
            "3233/87091200",
            "-57199/19160064",
            ("63901/19958400", "2098253/2554675200"),
            ("-71339/23284800", "55522157/11921817600"),
            ("53/18018", "-131647/295206912"),
            ("0/1", "-47/16384"),
        ],
    },
}

# Parameters (t, r) of each table, used to pick the matching enumeration.
QUASI_PARAMS: dict[str, tuple[int, int]] = {
    "cs_32": (3, 2),
    "cs_33": (3, 3),
    "cs_34": (3, 4),
    "cs_42": (4, 2),
    "cs_43": (4, 3),
    "cs_52": (5, 2),
}

CHECKSUM = "sha256:a71f78eea970ddd5cd966f82d6777beb7dd7890ac72607b32b82231c4a8f9887"


def canonical_dump() -> str:
    return json.dumps(QUASI_TABLES, sort_keys=True, separators=(",", ":"))


def checksum() -> str:
    return "sha256:" + hashlib.sha256(canonical_dump().encode()).hexdigest()
