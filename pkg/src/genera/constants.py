"""High-precision constants generated by tools/gen_constants.py."""

TABLE_DIGITS = 50

CONSTANTS = {
    "gamma": "0.577215664901532860606512090082402431042159335939924",
    "zeta3": "1.20205690315959428539973816151144999076498629234050",
    "zeta5": "1.03692775514336992633136548645703416805708091950191",
    "zeta7": "1.00834927738192282683979754984979675959986356056524",
    "zeta9": "1.00200839282608221441785276923241206048560585139489",
    "zeta11": "1.00049418860411946455870228252646993646860643575821",
    "zeta13": "1.00012271334757848914675183652635739571427510589551",
    "zeta15": "1.00003058823630702049355172851064506258762794870686",
}
