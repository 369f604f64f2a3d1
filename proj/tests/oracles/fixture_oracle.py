#!/usr/bin/env python3
"""Independent oracle for the fixture-derived metric values frozen into the C++ tests.

Pure Python (math only). Tables are typed in here separately from the C++ fixtures,
so a transcription slip on either side shows up as a mismatch.
"""
import math

TABLE1 = {  # swaps -> rows for inputs 00,10,01,11 ; columns b = 00,10,01,11
    0: [[0.940, 0.022, 0.031, 0.008], [0.117, 0.815, 0.029, 0.039], [0.121, 0.015, 0.840, 0.024], [0.031, 0.114, 0.115, 0.739]],
    2: [[0.684, 0.078, 0.172, 0.067], [0.154, 0.551, 0.094, 0.201], [0.250, 0.063, 0.617, 0.069], [0.113, 0.265, 0.136, 0.486]],
    4: [[0.595, 0.127, 0.164, 0.114], [0.190, 0.454, 0.143, 0.213], [0.263, 0.117, 0.511, 0.109], [0.177, 0.256, 0.173, 0.393]],
    6: [[0.510, 0.145, 0.219, 0.126], [0.240, 0.430, 0.166, 0.164], [0.324, 0.151, 0.396, 0.129], [0.194, 0.227, 0.193, 0.386]],
    8: [[0.406, 0.172, 0.276, 0.147], [0.253, 0.370, 0.184, 0.193], [0.326, 0.166, 0.366, 0.142], [0.212, 0.249, 0.205, 0.334]],
    10: [[0.374, 0.188, 0.287, 0.151], [0.257, 0.314, 0.209, 0.220], [0.353, 0.176, 0.313, 0.157], [0.250, 0.264, 0.218, 0.268]],
    12: [[0.357, 0.197, 0.282, 0.163], [0.264, 0.293, 0.212, 0.231], [0.360, 0.179, 0.297, 0.164], [0.257, 0.268, 0.225, 0.250]],
    14: [[0.357, 0.197, 0.283, 0.164], [0.264, 0.293, 0.212, 0.231], [0.360, 0.180, 0.297, 0.164], [0.257, 0.268, 0.225, 0.250]],
}
TABLE2 = {
    0.0: [[0.950, 0.018, 0.024, 0.008], [0.083, 0.885, 0.010, 0.022], [0.083, 0.007, 0.893, 0.016], [0.014, 0.070, 0.083, 0.833]],
    1.3: [[0.889, 0.029, 0.061, 0.020], [0.093, 0.824, 0.024, 0.059], [0.128, 0.021, 0.822, 0.028], [0.032, 0.121, 0.091, 0.756]],
    2.5: [[0.792, 0.044, 0.137, 0.028], [0.094, 0.731, 0.044, 0.131], [0.195, 0.037, 0.729, 0.040], [0.054, 0.209, 0.089, 0.649]],
    3.8: [[0.679, 0.056, 0.226, 0.039], [0.102, 0.619, 0.059, 0.220], [0.286, 0.049, 0.616, 0.050], [0.076, 0.319, 0.092, 0.514]],
    5.1: [[0.565, 0.061, 0.324, 0.050], [0.101, 0.510, 0.074, 0.315], [0.386, 0.053, 0.501, 0.061], [0.089, 0.407, 0.094, 0.410]],
    6.0: [[0.496, 0.065, 0.386, 0.054], [0.105, 0.447, 0.078, 0.370], [0.459, 0.063, 0.417, 0.061], [0.094, 0.456, 0.093, 0.357]],
}
TABLE3 = {
    0.0: [[0.945, 0.011, 0.043, 0.001], [0.144, 0.775, 0.030, 0.051], [0.156, 0.026, 0.765, 0.053], [0.044, 0.135, 0.128, 0.694]],
    0.9: [[0.794, 0.090, 0.074, 0.042], [0.156, 0.728, 0.054, 0.061], [0.163, 0.057, 0.706, 0.074], [0.079, 0.147, 0.135, 0.638]],
    1.8: [[0.699, 0.117, 0.118, 0.066], [0.170, 0.641, 0.082, 0.107], [0.204, 0.084, 0.617, 0.095], [0.109, 0.183, 0.151, 0.556]],
    2.8: [[0.620, 0.118, 0.179, 0.082], [0.170, 0.574, 0.098, 0.159], [0.269, 0.101, 0.528, 0.102], [0.131, 0.234, 0.158, 0.477]],
    3.7: [[0.531, 0.129, 0.244, 0.096], [0.181, 0.485, 0.120, 0.215], [0.339, 0.112, 0.438, 0.110], [0.149, 0.287, 0.156, 0.408]],
    4.6: [[0.461, 0.133, 0.307, 0.099], [0.180, 0.421, 0.128, 0.272], [0.399, 0.122, 0.367, 0.112], [0.169, 0.348, 0.150, 0.333]],
}
TABLE4 = {
    0.0: [[0.907, 0.039, 0.040, 0.013], [0.139, 0.801, 0.023, 0.036], [0.156, 0.027, 0.771, 0.046], [0.033, 0.119, 0.117, 0.731]],
    0.9: [[0.862, 0.054, 0.056, 0.028], [0.150, 0.777, 0.033, 0.040], [0.147, 0.055, 0.722, 0.075], [0.051, 0.112, 0.130, 0.707]],
    1.8: [[0.817, 0.069, 0.076, 0.039], [0.163, 0.737, 0.050, 0.051], [0.159, 0.085, 0.657, 0.099], [0.068, 0.125, 0.137, 0.670]],
    2.8: [[0.760, 0.081, 0.102, 0.057], [0.169, 0.710, 0.063, 0.058], [0.181, 0.108, 0.602, 0.109], [0.084, 0.129, 0.144, 0.643]],
    3.7: [[0.709, 0.092, 0.131, 0.068], [0.180, 0.674, 0.078, 0.068], [0.205, 0.119, 0.564, 0.111], [0.093, 0.140, 0.159, 0.608]],
    4.6: [[0.656, 0.107, 0.160, 0.076], [0.181, 0.647, 0.088, 0.084], [0.215, 0.125, 0.541, 0.119], [0.110, 0.133, 0.156, 0.601]],
}
# rows: (+,0), (x,0), (+,1), (x,1)
TABLE5 = {0.0: [0.008, 0.011, 0.051, 0.050], 1.2: [0.011, 0.027, 0.076, 0.071], 2.4: [0.009, 0.052, 0.095, 0.091],
          3.6: [0.010, 0.081, 0.119, 0.122], 4.8: [0.008, 0.098, 0.177, 0.176], 6.0: [0.005, 0.120, 0.251, 0.260]}
TABLE6 = {0: [0.009, 0.009, 0.061, 0.053], 2: [0.036, 0.043, 0.092, 0.089], 4: [0.062, 0.077, 0.125, 0.133], 6: [0.078, 0.084, 0.184, 0.175]}
TABLE7 = {0: [0.003, 0.024, 0.002, 0.021], 2: [0.028, 0.053, 0.029, 0.050], 4: [0.048, 0.081, 0.059, 0.089], 6: [0.076, 0.111, 0.094, 0.139]}
TABLE7_ACC = {0: [0.90, 0.86, 0.89, 0.83], 2: [0.85, 0.84, 0.82, 0.76], 4: [0.79, 0.81, 0.77, 0.70], 6: [0.75, 0.78, 0.71, 0.63]}
F_EC = 1.15


def entropy(ps):
    return -sum(p * math.log2(p) for p in ps if p > 0)


def mutual_information(rows):
    rows = [[v / sum(r) for v in r] for r in rows]
    h_cond = sum(0.25 * entropy(r) for r in rows)
    marg = [sum(0.25 * r[j] for r in rows) for j in range(4)]
    return entropy(marg), h_cond, entropy(marg) - h_cond


def h2(q):
    return 0.0 if q in (0.0, 1.0) else -q * math.log2(q) - (1 - q) * math.log2(1 - q)


def key_rate(q):
    return 1 - (1 + F_EC) * h2(q)


def root_of_key_rate():
    lo, hi = 1e-12, 0.5
    for _ in range(200):
        mid = (lo + hi) / 2
        if key_rate(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


if __name__ == "__main__":
    for name, table in (("table1", TABLE1), ("table2", TABLE2), ("table3", TABLE3), ("table4", TABLE4)):
        for x, rows in table.items():
            hb, hba, mi = mutual_information(rows)
            print(f"{name} x={x}: H(B)={hb:.17g} H(B|A)={hba:.17g} I={mi:.17g}")
    for name, table in (("table5", TABLE5), ("table6", TABLE6), ("table7", TABLE7)):
        for x, cells in table.items():
            q = sum(cells) / 4
            print(f"{name} x={x}: q={q:.17g} h={h2(q):.17g} lsec/N={key_rate(q):.17g}")
    print(f"h(0.11)={h2(0.11):.17g}")
    print(f"q*={root_of_key_rate():.17g}")
    print(f"lsec(8192,0.03)={8192 * key_rate(0.03):.17g}")
