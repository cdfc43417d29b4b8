"""Values as printed in the source publication, transcribed verbatim.

Used as golden data; nothing in here is computed.
"""

# (year, killed), in the printed (descending) order
ACCIDENTS = [
    (2004, 953), (2003, 1035), (2002, 1145), (2001, 1288), (2000, 1253), (1999, 1173),
    (1998, 1224), (1997, 1150), (1996, 1122), (1995, 1228), (1994, 1415), (1993, 1346),
    (1992, 1380), (1991, 1471), (1990, 1574), (1989, 1488), (1988, 1432), (1987, 1390),
    (1986, 1456), (1985, 1308), (1984, 1369), (1983, 1479), (1982, 1464), (1981, 1564),
    (1980, 1616), (1979, 1572), (1978, 1644), (1977, 1597), (1976, 1536), (1975, 1460),
    (1974, 1574),
]

SUBDIVISION_COUNTS = [1, 6, 13, 9]
BASE_INTERVALS = [(900, 1100), (1100, 1300), (1300, 1500), (1500, 1700)]

INTERVALS = [
    (900, 1100), (1100, 1133.33), (1133.33, 1166.66), (1166.66, 1199.99),
    (1199.99, 1233.32), (1233.32, 1266.65), (1266.65, 1300.00), (1300.00, 1315.38),
    (1315.38, 1330.76), (1330.76, 1346.14), (1346.14, 1361.52), (1361.52, 1376.90),
    (1376.90, 1392.28), (1392.28, 1407.66), (1407.66, 1423.04), (1423.04, 1438.42),
    (1438.42, 1453.80), (1453.80, 1469.18), (1469.18, 1484.56), (1484.56, 1500.00),
    (1500.00, 1522.22), (1522.22, 1544.44), (1544.44, 1566.66), (1566.66, 1588.88),
    (1588.88, 1611.10), (1611.10, 1633.32), (1633.32, 1655.54), (1655.54, 1677.76),
    (1677.76, 1700.00),
]

# year, actual, interval midpoint, forecast, squared error, relative error
EVALUATION = [
    (2004, 953, 1000.0000, 1036.0825, 6902.7051, 0.0872),
    (2003, 1035, 1000.0000, 1036.0825, 1.1718, 0.0010),
    (2002, 1145, 1150.0000, 1149.5167, 20.4008, 0.0039),
    (2001, 1288, 1283.3335, 1280.7594, 52.4263, 0.0056),
    (2000, 1253, 1250.0002, 1249.5555, 11.8643, 0.0027),
    (1999, 1173, 1183.3335, 1182.8638, 97.2940, 0.0084),
    (1998, 1224, 1216.6667, 1216.2100, 60.6847, 0.0064),
    (1997, 1150, 1150.0000, 1149.5167, 0.2336, 0.0004),
    (1996, 1122, 1116.6667, 1092.7141, 857.6633, 0.0261),
    (1995, 1228, 1216.6667, 1216.2100, 139.0050, 0.0096),
    (1994, 1415, 1415.3848, 1415.3013, 0.0908, 0.0002),
    (1993, 1346, 1338.4617, 1338.3732, 58.1686, 0.0057),
    (1992, 1380, 1384.6155, 1384.5300, 20.5212, 0.0033),
    (1991, 1471, 1476.9233, 1476.8433, 34.1437, 0.0040),
    (1990, 1574, 1577.7776, 1577.6211, 13.1123, 0.0023),
    (1989, 1488, 1492.3079, 1493.0643, 25.6474, 0.0034),
    (1988, 1432, 1430.7695, 1430.6868, 1.7246, 0.0009),
    (1987, 1390, 1384.6155, 1384.5300, 29.9206, 0.0039),
    (1986, 1456, 1461.5388, 1461.4578, 29.7872, 0.0037),
    (1985, 1308, 1307.6924, 1305.2928, 7.3287, 0.0021),
    (1984, 1369, 1369.2310, 1369.1444, 0.0209, 0.0001),
    (1983, 1479, 1476.9233, 1476.8433, 4.6515, 0.0015),
    (1982, 1464, 1461.5388, 1461.4578, 6.4630, 0.0017),
    (1981, 1564, 1555.5554, 1555.3967, 74.0163, 0.0055),
    (1980, 1616, 1622.2219, 1622.0697, 36.8413, 0.0038),
    (1979, 1572, 1577.7776, 1577.6211, 31.5967, 0.0036),
    (1978, 1644, 1644.4441, 1644.2939, 0.0864, 0.0002),
    (1977, 1597, 1599.9998, 1599.8455, 8.0966, 0.0018),
    (1976, 1536, 1533.3333, 1533.1722, 7.9962, 0.0018),
    (1975, 1460, 1461.5388, 1461.4578, 2.1251, 0.0010),
    (1974, 1574, 1577.7776, 1577.6211, 13.1123, 0.0023),
]
MSE = 275.77
AFER = 0.658643

# third-order groups as printed, numbered 1..26
GROUPS = [
    ((1, 3, 7), 6), ((3, 7, 6), 4), ((7, 6, 4), 5), ((6, 4, 5), 3), ((4, 5, 3), 2),
    ((5, 3, 2), 5), ((3, 2, 5), 15), ((2, 5, 15), 10), ((5, 15, 10), 13), ((15, 10, 13), 19),
    ((10, 13, 19), 24), ((13, 19, 24), 20), ((19, 24, 20), 16), ((24, 20, 16), 13),
    ((20, 16, 13), 18), ((16, 13, 18), 8), ((13, 18, 8), 12), ((18, 13, 12), 19),
    ((13, 12, 19), 18), ((12, 19, 18), 23), ((19, 18, 23), 26), ((18, 23, 26), 24),
    ((23, 26, 24), 27), ((26, 24, 27), 22), ((24, 27, 22), 18), ((27, 22, 18), 24),
]

# comparison columns, same (descending) year order as ACCIDENTS
JILANI = [995, 995, 1095, 1296, 1296, 1196, 1196, 1196, 1095, 1396, 1296, 1396, 1497, 1497, 1497,
          1396, 1396, 1497, 1296, 1396, 1497, 1497, 1497, 1497, 1497, 1497, 1497, 1497, 1497, 1497, 1497]
LEE = [1000, 1000, 1100, 1300, 1300, 1200, 1200, 1200, 1100, 1400, 1300, 1400, 1500, 1500, 1500,
       1400, 1400, 1500, 1300, 1400, 1500, 1500, 1500, 1500, 1500, 1500, 1500, 1500, 1500, 1500, 1500]
PROPOSED_ROUNDED = [1036, 1036, 1149, 1280, 1249, 1182, 1216, 1149, 1092, 1216, 1415, 1338, 1384, 1476,
                    1577, 1493, 1430, 1384, 1461, 1305, 1369, 1476, 1461, 1555, 1622, 1577, 1644, 1599,
                    1533, 1461, 1577]

SUMMARY = {
    "Jilani": (6908.61, 5.061793),
    "Lee": (6850.38, 5.067887),
    "proposed": (275.77, 0.658643),
}
