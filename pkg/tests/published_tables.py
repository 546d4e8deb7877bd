"""
Published per-country statistics used to check the summary rules
"""

COUNTRIES = [
    "Australia",
    "Belgium",
    "Denmark",
    "Finland",
    "France",
    "Germany",
    "Italy",
    "Japan",
    "Netherlands",
    "Norway",
    "Portugal",
    "Spain",
    "Sweden",
    "Switzerland",
    "UK",
    "USA",
]

# HAC t statistics of the in-sample slopes, per asset class
IN_SAMPLE_T = {
    "bond": {
        "Australia": [1.626],
        "Belgium": [0.183],
        "Denmark": [0.474],
        "Finland": [1.369],
        "France": [-0.687],
        "Germany": [-0.207],
        "Italy": [-0.255],
        "Japan": [-4.645],
        "Netherlands": [-0.211],
        "Norway": [0.197],
        "Portugal": [1.652],
        "Spain": [-1.009],
        "Sweden": [0.625],
        "Switzerland": [-0.728],
        "UK": [1.183],
        "USA": [0.488],
    },
    "equity": {
        "Australia": [1.673],
        "Belgium": [2.021],
        "Denmark": [-0.138],
        "Finland": [0.717],
        "France": [3.179],
        "Germany": [-0.051],
        "Italy": [0.377],
        "Japan": [0.743],
        "Netherlands": [1.108],
        "Norway": [0.738],
        "Portugal": [7.066],
        "Spain": [0.659],
        "Sweden": [0.370],
        "Switzerland": [-0.399],
        "UK": [3.878],
        "USA": [0.804],
    },
    "housing": {
        "Australia": [1.373],
        "Belgium": [-1.270],
        "Denmark": [2.008],
        "Finland": [2.119],
        "France": [2.132],
        "Germany": [1.965],
        "Italy": [0.880],
        "Japan": [2.421],
        "Netherlands": [3.481],
        "Norway": [1.390],
        "Portugal": [2.533],
        "Spain": [1.601],
        "Sweden": [1.008],
        "Switzerland": [0.695],
        "UK": [2.501],
        "USA": [1.460],
    },
    "risky": {
        "Australia": [-1.435, 1.299, -1.595],
        "Belgium": [0.178, -0.044, -0.955],
        "Denmark": [-0.288, 1.010, -2.510],
        "Finland": [0.483, 2.613, -0.551],
        "France": [-5.578, 2.389, -0.465],
        "Germany": [-1.106, 2.897, -3.254],
        "Italy": [-2.875, 1.726, -1.484],
        "Japan": [0.466, 1.181, 0.997],
        "Netherlands": [-1.190, 3.067, -1.385],
        "Norway": [-0.638, 1.933, -1.466],
        "Portugal": [0.605, 4.065, -0.810],
        "Spain": [-0.884, 1.214, -1.879],
        "Sweden": [-0.974, 1.729, -1.685],
        "Switzerland": [-0.369, 1.074, -3.584],
        "UK": [2.386, 1.807, -0.407],
        "USA": [-0.206, 1.406, -2.912],
    },
    "wealth": {
        "Australia": [-1.497, 1.069, -1.183],
        "Belgium": [0.163, 0.128, -0.811],
        "Denmark": [-0.468, 0.753, -2.399],
        "Finland": [0.516, 2.688, -0.319],
        "France": [-4.814, 2.313, -0.409],
        "Germany": [-1.014, 2.830, -3.084],
        "Italy": [-2.712, 1.122, -1.644],
        "Japan": [0.663, 0.785, 1.202],
        "Netherlands": [-1.229, 2.325, -1.138],
        "Norway": [-0.713, 1.763, -1.779],
        "Portugal": [1.502, 7.887, -0.260],
        "Spain": [-0.773, 0.830, -1.895],
        "Sweden": [-0.692, 1.216, -1.523],
        "Switzerland": [-0.127, 1.475, -3.935],
        "UK": [1.771, 0.645, 0.456],
        "USA": [-0.547, 1.944, -2.467],
    },
}

# (out-of-sample R2, Clark-West p) per asset class
OUT_OF_SAMPLE = {
    "bond": {
        "Australia": (-0.011, 0.513),
        "Belgium": (-0.030, 0.547),
        "Denmark": (-0.060, 0.545),
        "Finland": (-0.088, 0.764),
        "France": (-0.022, 0.508),
        "Germany": (-0.148, 0.592),
        "Italy": (-0.090, 0.535),
        "Japan": (0.009, 0.159),
        "Netherlands": (-0.036, 0.323),
        "Norway": (-0.038, 0.737),
        "Portugal": (-0.049, 0.828),
        "Spain": (-0.065, 0.371),
        "Sweden": (-0.087, 0.849),
        "Switzerland": (-0.144, 0.233),
        "UK": (-0.050, 0.204),
        "USA": (-0.029, 0.869),
    },
    "equity": {
        "Australia": (0.014, 0.180),
        "Belgium": (-0.010, 0.317),
        "Denmark": (-0.042, 0.514),
        "Finland": (-0.052, 0.149),
        "France": (0.003, 0.280),
        "Germany": (-20.631, 0.408),
        "Italy": (-0.238, 0.258),
        "Japan": (-0.099, 0.989),
        "Netherlands": (-0.021, 0.904),
        "Norway": (-0.023, 0.553),
        "Portugal": (0.030, 0.313),
        "Spain": (-0.547, 0.990),
        "Sweden": (-0.019, 0.097),
        "Switzerland": (-0.120, 0.228),
        "UK": (0.099, 0.020),
        "USA": (-0.022, 0.711),
    },
    "housing": {
        "Australia": (-0.026, 0.459),
        "Belgium": (-0.100, 0.628),
        "Denmark": (-0.002, 0.220),
        "Finland": (-0.169, 0.436),
        "France": (0.042, 0.030),
        "Germany": (0.014, 0.049),
        "Italy": (0.045, 0.172),
        "Japan": (-0.040, 0.576),
        "Netherlands": (0.034, 0.110),
        "Norway": (-0.089, 0.205),
        "Portugal": (0.052, 0.144),
        "Spain": (-0.017, 0.454),
        "Sweden": (-0.017, 0.326),
        "Switzerland": (-0.051, 0.339),
        "UK": (-0.065, 0.019),
        "USA": (-0.224, 0.928),
    },
    "risky": {
        "Australia": (-0.019, 0.311),
        "Belgium": (-0.318, 0.655),
        "Denmark": (-0.125, 0.807),
        "Finland": (-0.118, 0.083),
        "France": (0.102, 0.033),
        "Germany": (-0.287, 0.025),
        "Italy": (-0.292, 0.153),
        "Japan": (-0.429, 0.438),
        "Netherlands": (-0.010, 0.146),
        "Norway": (-0.225, 0.995),
        "Portugal": (-4.703, 0.601),
        "Spain": (-0.115, 0.150),
        "Sweden": (-0.078, 0.112),
        "Switzerland": (-0.074, 0.133),
        "UK": (-0.151, 0.543),
        "USA": (-0.195, 0.907),
    },
    "wealth": {
        "Australia": (-0.043, 0.719),
        "Belgium": (-0.249, 0.548),
        "Denmark": (-0.167, 0.594),
        "Finland": (-0.111, 0.074),
        "France": (0.108, 0.021),
        "Germany": (-0.322, 0.034),
        "Italy": (-0.296, 0.241),
        "Japan": (-0.684, 0.432),
        "Netherlands": (-0.079, 0.434),
        "Norway": (-0.258, 0.912),
        "Portugal": (-4.891, 0.670),
        "Spain": (-0.093, 0.129),
        "Sweden": (-0.102, 0.167),
        "Switzerland": (-0.066, 0.145),
        "UK": (-0.186, 0.672),
        "USA": (-0.267, 0.605),
    },
}

# CER gains in percent per asset class
CER_GAIN = {
    "bond": {
        "Australia": -0.47,
        "Belgium": -0.69,
        "Denmark": -0.69,
        "Finland": -0.90,
        "France": -0.25,
        "Germany": -0.40,
        "Italy": -0.50,
        "Japan": 0.66,
        "Netherlands": -0.58,
        "Norway": -0.44,
        "Portugal": -0.94,
        "Spain": 0.14,
        "Sweden": -0.30,
        "Switzerland": -0.46,
        "UK": -0.22,
        "USA": 0.01,
    },
    "equity": {
        "Australia": 0.27,
        "Belgium": -0.10,
        "Denmark": -0.78,
        "Finland": -0.71,
        "France": 0.02,
        "Germany": -6.05E+18,
        "Italy": -1.64,
        "Japan": -0.47,
        "Netherlands": 1.52,
        "Norway": -0.48,
        "Portugal": -1.11,
        "Spain": 0.34,
        "Sweden": -0.19,
        "Switzerland": -1.36,
        "UK": -0.29,
        "USA": -0.31,
    },
    "housing": {
        "Australia": -2.74,
        "Belgium": -0.48,
        "Denmark": -0.47,
        "Finland": 0.61,
        "France": -0.51,
        "Germany": 0.39,
        "Italy": 0.53,
        "Japan": 0.13,
        "Netherlands": 0.21,
        "Norway": -1.03,
        "Portugal": -0.22,
        "Spain": -0.20,
        "Sweden": -0.87,
        "Switzerland": 0.01,
        "UK": -0.12,
        "USA": -0.82,
    },
    "risky": {
        "Australia": -2.45,
        "Belgium": -0.83,
        "Denmark": -0.45,
        "Finland": 1.26,
        "France": -1.87,
        "Germany": 0.93,
        "Italy": 0.56,
        "Japan": -0.15,
        "Netherlands": -0.72,
        "Norway": -1.42,
        "Portugal": -1.60,
        "Spain": 0.08,
        "Sweden": -0.39,
        "Switzerland": -0.06,
        "UK": -0.95,
        "USA": -1.07,
    },
    "wealth": {
        "Australia": -0.28,
        "Belgium": -1.02,
        "Denmark": -0.47,
        "Finland": 1.27,
        "France": -1.53,
        "Germany": 0.69,
        "Italy": 0.26,
        "Japan": -0.21,
        "Netherlands": -0.83,
        "Norway": -1.01,
        "Portugal": -1.85,
        "Spain": -0.49,
        "Sweden": -0.37,
        "Switzerland": -0.38,
        "UK": -0.89,
        "USA": -0.66,
    },
}

# HAC t statistics of payout growth on the payout-price ratio
GROWTH_T = {
    "equity": {
        "Australia": -1.317,
        "Belgium": -2.097,
        "Denmark": -2.847,
        "Finland": -4.040,
        "France": -0.582,
        "Germany": -40.747,
        "Italy": -3.410,
        "Japan": -1.779,
        "Netherlands": -3.740,
        "Norway": -2.044,
        "Portugal": -4.702,
        "Spain": -28.774,
        "Sweden": -5.682,
        "Switzerland": -4.621,
        "UK": -1.705,
        "USA": -3.133,
    },
    "housing": {
        "Australia": 1.107,
        "Belgium": -1.827,
        "Denmark": -1.613,
        "Finland": -0.174,
        "France": 1.272,
        "Germany": -1.831,
        "Italy": -0.795,
        "Japan": -0.489,
        "Netherlands": 0.273,
        "Norway": -0.463,
        "Portugal": 2.630,
        "Spain": -0.388,
        "Sweden": 0.051,
        "Switzerland": -3.047,
        "UK": -0.673,
        "USA": -4.208,
    },
}
