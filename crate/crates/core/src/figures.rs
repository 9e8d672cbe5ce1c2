//! Published reference curves for the standard figures.
//!
//! Each figure sweeps one variable with the others held fixed and reports
//! three panels: cos∠(ŵ, μ), ‖ŵ‖ and the total error. A panel stores the
//! theory curve and the simulation markers (mean and standard deviation over
//! 100 data sets at p = 200, σ = 1, π₀ = π₁ = ½). Figure 1 is the
//! separability boundary δ*(μ/σ).

/// Training regime of a figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    Hard,
    Soft { tau: f64 },
}

/// The swept variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Mu,
    Delta,
    Tau,
}

impl Sweep {
    pub fn name(self) -> &'static str {
        match self {
            Sweep::Mu => "mu",
            Sweep::Delta => "delta",
            Sweep::Tau => "tau",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Marker {
    pub x: f64,
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub theory: &'static [(f64, f64)],
    pub simulation: &'static [Marker],
}

impl Panel {
    /// Theory value stored at `x`, if `x` is one of the curve's abscissae.
    pub fn theory_at(&self, x: f64) -> Option<f64> {
        self.theory.iter().find(|(t, _)| (t - x).abs() <= 1e-9 * x.abs().max(1.0)).map(|&(_, y)| y)
    }

    pub fn marker_at(&self, x: f64) -> Option<Marker> {
        self.simulation.iter().find(|m| (m.x - x).abs() <= 1e-9 * x.abs().max(1.0)).copied()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Figure {
    pub number: u8,
    pub regime: Regime,
    pub sweep: Sweep,
    /// Value of μ when it is not swept.
    pub mu: f64,
    /// Value of δ when it is not swept.
    pub delta: f64,
    pub cos: Panel,
    pub norm: Panel,
    pub err: Panel,
}

impl Figure {
    pub fn panels(&self) -> [(&'static str, Panel); 3] {
        [("cos", self.cos), ("norm", self.norm), ("err", self.err)]
    }

    /// Abscissae carrying a simulation marker in at least one panel, ascending.
    pub fn simulated_grid(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self.panels().iter().flat_map(|(_, p)| p.simulation.iter().map(|m| m.x)).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        xs
    }

    /// Abscissae of the theory curves, ascending.
    pub fn theory_grid(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self.panels().iter().flat_map(|(_, p)| p.theory.iter().map(|t| t.0)).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        xs
    }
}

/// Separability boundary: (μ/σ, δ*) at balanced classes.
pub const BOUNDARY: &[(f64, f64)] = &[
        (0.100000, 2.012767), (0.200000, 2.051490), (0.300000, 2.117461), (0.400000, 2.212917),
        (0.500000, 2.341184), (0.600000, 2.506868), (0.700000, 2.716147), (0.800000, 2.977167),
        (0.900000, 3.300529), (1.000000, 3.700023), (1.100000, 4.193603), (1.200000, 4.804553),
        (1.300000, 5.563407), (1.400000, 6.510113), (1.500000, 7.697465), (1.600000, 9.195418),
        (1.700000, 11.097548), (1.800000, 13.529333), (1.900000, 16.660553), (2.000000, 20.722920),
        (2.100000, 26.033251), (2.200000, 33.030532), (2.300000, 42.324067), (2.400000, 54.769454),
        (2.500000, 71.574029), (2.600000, 94.456163), (2.700000, 125.879762), (2.800000, 169.404105),
        (2.900000, 230.218260), (3.000000, 315.921855),
];

const FIG2_COS_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.079393), (0.300000, 0.229386), (0.500000, 0.358020), (0.700000, 0.461860),
        (0.900000, 0.543620), (1.100000, 0.607703), (1.300000, 0.658363), (1.500000, 0.698891),
        (1.700000, 0.731778), (1.900000, 0.758847), (2.100000, 0.781418), (2.300000, 0.800448),
        (2.500000, 0.816695), (2.700000, 0.830669), (2.900000, 0.842819), (3.100000, 0.853459),
        (3.300000, 0.862846), (3.500000, 0.871180), (3.700000, 0.878624), (3.900000, 0.885312),
        (4.100000, 0.891317), (4.300000, 0.896787), (4.500000, 0.901757), (4.700000, 0.906318),
        (4.900000, 0.910479),
];

const FIG2_COS_SIM: &[Marker] = &[
        Marker { x: 0.500000, mean: 0.355081, std: 0.057828 },
        Marker { x: 1.300000, mean: 0.656146, std: 0.031774 },
        Marker { x: 2.100000, mean: 0.782139, std: 0.025958 },
        Marker { x: 2.900000, mean: 0.845220, std: 0.015475 },
        Marker { x: 3.700000, mean: 0.877715, std: 0.014778 },
        Marker { x: 4.500000, mean: 0.903221, std: 0.011098 },
];

const FIG2_NORM_THEORY: &[(f64, f64)] = &[
        (0.700000, 5.659959), (0.900000, 3.602824), (1.100000, 2.544868), (1.300000, 1.924015),
        (1.500000, 1.525285), (1.700000, 1.251891), (1.900000, 1.054920), (2.100000, 0.907416),
        (2.300000, 0.793481), (2.500000, 0.703223), (2.700000, 0.630202), (2.900000, 0.570070),
        (3.100000, 0.519800), (3.300000, 0.477220), (3.500000, 0.440745), (3.700000, 0.409186),
        (3.900000, 0.381638), (4.100000, 0.357404), (4.300000, 0.335935), (4.500000, 0.316793),
        (4.700000, 0.299630), (4.900000, 0.284161),
];

const FIG2_NORM_SIM: &[Marker] = &[
        Marker { x: 1.300000, mean: 1.942461, std: 0.225534 },
        Marker { x: 2.100000, mean: 0.913011, std: 0.057097 },
        Marker { x: 2.900000, mean: 0.569401, std: 0.027160 },
        Marker { x: 3.700000, mean: 0.409894, std: 0.014909 },
        Marker { x: 4.500000, mean: 0.316385, std: 0.008516 },
];

const FIG2_ERR_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.496833), (0.300000, 0.472568), (0.500000, 0.428965), (0.700000, 0.373233),
        (0.900000, 0.312330), (1.100000, 0.251916), (1.300000, 0.196034), (1.500000, 0.147242),
        (1.700000, 0.106746), (1.900000, 0.074678), (2.100000, 0.050401), (2.300000, 0.032808),
        (2.500000, 0.020589), (2.700000, 0.012455), (2.900000, 0.007259), (3.100000, 0.004076),
        (3.300000, 0.002204), (3.500000, 0.001148), (3.700000, 0.000575), (3.900000, 0.000277),
        (4.100000, 0.000129), (4.300000, 0.000058), (4.500000, 0.000025), (4.700000, 0.000010),
        (4.900000, 0.000004),
];

const FIG2_ERR_SIM: &[Marker] = &[
        Marker { x: 0.500000, mean: 0.429058, std: 0.012297 },
        Marker { x: 1.300000, mean: 0.197248, std: 0.013070 },
        Marker { x: 2.100000, mean: 0.050890, std: 0.006015 },
        Marker { x: 2.900000, mean: 0.007336, std: 0.001420 },
        Marker { x: 3.700000, mean: 0.000620, std: 0.000380 },
];

const FIG3_COS_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.286106), (0.200000, 0.367818), (0.300000, 0.414463), (0.400000, 0.445502),
        (0.500000, 0.468072), (0.600000, 0.485498), (0.700000, 0.499455), (0.800000, 0.511007),
        (0.900000, 0.520750), (1.000000, 0.529173), (1.100000, 0.536536), (1.200000, 0.543052),
        (1.300000, 0.548844), (1.400000, 0.554096), (1.500000, 0.558866), (1.600000, 0.563228),
        (1.700000, 0.567238), (1.800000, 0.570940), (1.900000, 0.574377), (2.000000, 0.577580),
        (2.100000, 0.580575), (2.200000, 0.583385), (2.300000, 0.586029), (2.400000, 0.588524),
        (2.500000, 0.590884), (2.600000, 0.593122), (2.700000, 0.595248), (2.800000, 0.597271),
        (2.900000, 0.599200), (3.000000, 0.601043),
];

const FIG3_COS_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.292169, std: 0.068311 },
        Marker { x: 0.500000, mean: 0.471335, std: 0.046313 },
        Marker { x: 0.900000, mean: 0.513079, std: 0.046942 },
        Marker { x: 1.300000, mean: 0.553376, std: 0.041451 },
        Marker { x: 1.700000, mean: 0.569304, std: 0.037837 },
        Marker { x: 2.100000, mean: 0.586522, std: 0.044094 },
        Marker { x: 2.500000, mean: 0.588257, std: 0.037694 },
        Marker { x: 2.900000, mean: 0.599839, std: 0.040312 },
];

const FIG3_NORM_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.317814), (0.200000, 0.455894), (0.300000, 0.570062), (0.400000, 0.674977),
        (0.500000, 0.776231), (0.600000, 0.876761), (0.700000, 0.978453), (0.800000, 1.082711),
        (0.900000, 1.190710), (1.000000, 1.303535), (1.100000, 1.422261), (1.200000, 1.548003),
        (1.300000, 1.681977), (1.400000, 1.825536), (1.500000, 1.980226), (1.600000, 2.147846),
        (1.700000, 2.330519), (1.800000, 2.530784), (1.900000, 2.751724), (2.000000, 2.997120),
        (2.100000, 3.271683), (2.200000, 3.581366), (2.300000, 3.933803), (2.400000, 4.338971),
        (2.500000, 4.810150), (2.600000, 5.365445), (2.700000, 6.030192), (2.800000, 6.840974),
        (2.900000, 7.852653), (3.000000, 9.151430),
];

const FIG3_NORM_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.319913, std: 0.015755 },
        Marker { x: 0.500000, mean: 0.779787, std: 0.048421 },
        Marker { x: 0.900000, mean: 1.200604, std: 0.100904 },
        Marker { x: 1.300000, mean: 1.675963, std: 0.155774 },
        Marker { x: 1.700000, mean: 2.303410, std: 0.252017 },
        Marker { x: 2.100000, mean: 3.368251, std: 0.608712 },
        Marker { x: 2.500000, mean: 5.055271, std: 1.811203 },
        Marker { x: 2.900000, mean: 8.641536, std: 3.940439 },
];

const FIG3_ERR_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.387398), (0.200000, 0.356505), (0.300000, 0.339267), (0.400000, 0.327979),
        (0.500000, 0.319866), (0.600000, 0.313662), (0.700000, 0.308730), (0.800000, 0.304673),
        (0.900000, 0.301270), (1.000000, 0.298343), (1.100000, 0.295794), (1.200000, 0.293547),
        (1.300000, 0.291556), (1.400000, 0.289757), (1.500000, 0.288126), (1.600000, 0.286640),
        (1.700000, 0.285276), (1.800000, 0.284020), (1.900000, 0.282856), (2.000000, 0.281774),
        (2.100000, 0.280764), (2.200000, 0.279817), (2.300000, 0.278928), (2.400000, 0.278090),
        (2.500000, 0.277299), (2.600000, 0.276550), (2.700000, 0.275839), (2.800000, 0.275163),
        (2.900000, 0.274520), (3.000000, 0.273906),
];

const FIG3_ERR_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.388054, std: 0.027462 },
        Marker { x: 0.500000, mean: 0.321232, std: 0.017746 },
        Marker { x: 0.900000, mean: 0.305498, std: 0.017779 },
        Marker { x: 1.300000, mean: 0.290670, std: 0.015193 },
        Marker { x: 1.700000, mean: 0.285058, std: 0.014186 },
        Marker { x: 2.100000, mean: 0.279372, std: 0.016972 },
        Marker { x: 2.500000, mean: 0.278726, std: 0.014126 },
        Marker { x: 2.900000, mean: 0.273488, std: 0.014389 },
];

const FIG4_COS_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.135963), (0.300000, 0.377844), (0.500000, 0.555454), (0.700000, 0.673082),
        (0.900000, 0.748750), (1.100000, 0.797941), (1.300000, 0.830743), (1.500000, 0.853235),
        (1.700000, 0.869068), (1.900000, 0.880469), (2.100000, 0.888840), (2.300000, 0.895096),
        (2.500000, 0.899852), (2.700000, 0.903539), (2.900000, 0.906458), (3.100000, 0.908830),
        (3.300000, 0.910819), (3.500000, 0.912548), (3.700000, 0.914110), (3.900000, 0.915572),
        (4.100000, 0.916986), (4.300000, 0.918392), (4.500000, 0.919815), (4.700000, 0.921273),
        (4.900000, 0.922776),
];

const FIG4_COS_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.127772, std: 0.064730 },
        Marker { x: 0.500000, mean: 0.555762, std: 0.043863 },
        Marker { x: 0.900000, mean: 0.747662, std: 0.023757 },
        Marker { x: 1.300000, mean: 0.830099, std: 0.020030 },
        Marker { x: 1.700000, mean: 0.868012, std: 0.014900 },
        Marker { x: 2.100000, mean: 0.889516, std: 0.009208 },
        Marker { x: 2.500000, mean: 0.899936, std: 0.008778 },
        Marker { x: 2.900000, mean: 0.908229, std: 0.009037 },
        Marker { x: 3.300000, mean: 0.909839, std: 0.008482 },
        Marker { x: 3.700000, mean: 0.914640, std: 0.008125 },
        Marker { x: 4.100000, mean: 0.917212, std: 0.006883 },
        Marker { x: 4.500000, mean: 0.919855, std: 0.007405 },
        Marker { x: 4.900000, mean: 0.922943, std: 0.008281 },
];

const FIG4_NORM_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.540732), (0.300000, 0.554618), (0.500000, 0.574409), (0.700000, 0.592032),
        (0.900000, 0.603233), (1.100000, 0.606809), (1.300000, 0.603152), (1.500000, 0.593344),
        (1.700000, 0.578678), (1.900000, 0.560437), (2.100000, 0.539772), (2.300000, 0.517652),
        (2.500000, 0.494854), (2.700000, 0.471972), (2.900000, 0.449448), (3.100000, 0.427591),
        (3.300000, 0.406606), (3.500000, 0.386620), (3.700000, 0.367696), (3.900000, 0.349858),
        (4.100000, 0.333098), (4.300000, 0.317387), (4.500000, 0.302683), (4.700000, 0.288936),
        (4.900000, 0.276091),
];

const FIG4_NORM_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.542057, std: 0.015421 },
        Marker { x: 0.500000, mean: 0.576317, std: 0.013595 },
        Marker { x: 0.900000, mean: 0.604751, std: 0.011028 },
        Marker { x: 1.300000, mean: 0.601306, std: 0.010323 },
        Marker { x: 1.700000, mean: 0.579985, std: 0.008994 },
        Marker { x: 2.100000, mean: 0.539963, std: 0.008864 },
        Marker { x: 2.500000, mean: 0.494191, std: 0.009318 },
        Marker { x: 2.900000, mean: 0.449139, std: 0.008544 },
        Marker { x: 3.300000, mean: 0.406217, std: 0.007712 },
        Marker { x: 3.700000, mean: 0.366913, std: 0.007391 },
        Marker { x: 4.100000, mean: 0.332364, std: 0.007014 },
        Marker { x: 4.500000, mean: 0.302432, std: 0.005633 },
        Marker { x: 4.900000, mean: 0.275671, std: 0.005795 },
];

const FIG4_ERR_THEORY: &[(f64, f64)] = &[
        (0.100000, 0.494576), (0.300000, 0.454875), (0.500000, 0.390611), (0.700000, 0.318764),
        (0.900000, 0.250195), (1.100000, 0.190044), (1.300000, 0.140079), (1.500000, 0.100298),
        (1.700000, 0.069782), (1.900000, 0.047174), (2.100000, 0.030981), (2.300000, 0.019761),
        (2.500000, 0.012236), (2.700000, 0.007353), (2.900000, 0.004285), (3.100000, 0.002421),
        (3.300000, 0.001325), (3.500000, 0.000702),
];

const FIG4_ERR_SIM: &[Marker] = &[
        Marker { x: 0.100000, mean: 0.495752, std: 0.005544 },
        Marker { x: 0.500000, mean: 0.391237, std: 0.009954 },
        Marker { x: 0.900000, mean: 0.251228, std: 0.007699 },
        Marker { x: 1.300000, mean: 0.141395, std: 0.007083 },
        Marker { x: 1.700000, mean: 0.070668, std: 0.004143 },
        Marker { x: 2.100000, mean: 0.031154, std: 0.002209 },
        Marker { x: 2.500000, mean: 0.012306, std: 0.001323 },
        Marker { x: 2.900000, mean: 0.004374, std: 0.000760 },
        Marker { x: 3.300000, mean: 0.001353, std: 0.000412 },
];

const FIG5_COS_THEORY: &[(f64, f64)] = &[
        (0.500000, 0.536832), (1.000000, 0.645639), (1.500000, 0.705460), (2.000000, 0.745151),
        (2.500000, 0.774032), (3.000000, 0.796261), (3.500000, 0.814035), (4.000000, 0.828648),
        (4.500000, 0.840920), (5.000000, 0.851391),
];

const FIG5_COS_SIM: &[Marker] = &[
        Marker { x: 0.500000, mean: 0.535724, std: 0.043998 },
        Marker { x: 1.000000, mean: 0.645911, std: 0.034209 },
        Marker { x: 1.500000, mean: 0.706376, std: 0.028138 },
        Marker { x: 2.000000, mean: 0.749615, std: 0.024462 },
        Marker { x: 2.500000, mean: 0.774751, std: 0.023879 },
        Marker { x: 3.000000, mean: 0.798500, std: 0.019165 },
        Marker { x: 3.500000, mean: 0.812315, std: 0.017253 },
        Marker { x: 4.000000, mean: 0.829047, std: 0.014283 },
        Marker { x: 4.500000, mean: 0.840631, std: 0.016247 },
        Marker { x: 5.000000, mean: 0.850802, std: 0.015865 },
];

const FIG5_NORM_THEORY: &[(f64, f64)] = &[
        (0.500000, 0.519515), (1.000000, 0.648842), (1.500000, 0.728905), (2.000000, 0.786883),
        (2.500000, 0.832170), (3.000000, 0.869184), (3.500000, 0.900368), (4.000000, 0.927221),
        (4.500000, 0.950730), (5.000000, 0.971587),
];

const FIG5_NORM_SIM: &[Marker] = &[
        Marker { x: 0.500000, mean: 0.520970, std: 0.011723 },
        Marker { x: 1.000000, mean: 0.647284, std: 0.013539 },
        Marker { x: 1.500000, mean: 0.728338, std: 0.015010 },
        Marker { x: 2.000000, mean: 0.785275, std: 0.017545 },
        Marker { x: 2.500000, mean: 0.833578, std: 0.016254 },
        Marker { x: 3.000000, mean: 0.868152, std: 0.016594 },
        Marker { x: 3.500000, mean: 0.899201, std: 0.018513 },
        Marker { x: 4.000000, mean: 0.926154, std: 0.019137 },
        Marker { x: 4.500000, mean: 0.946909, std: 0.016327 },
        Marker { x: 5.000000, mean: 0.973289, std: 0.018476 },
];

const FIG5_ERR_THEORY: &[(f64, f64)] = &[
        (0.500000, 0.295692), (1.000000, 0.259256), (1.500000, 0.240262), (2.000000, 0.228090),
        (2.500000, 0.219456), (3.000000, 0.212940), (3.500000, 0.207813), (4.000000, 0.203652),
        (4.500000, 0.200196), (5.000000, 0.197276),
];

const FIG5_ERR_SIM: &[Marker] = &[
        Marker { x: 0.500000, mean: 0.296155, std: 0.015549 },
        Marker { x: 1.000000, mean: 0.259971, std: 0.012631 },
        Marker { x: 1.500000, mean: 0.240475, std: 0.009477 },
        Marker { x: 2.000000, mean: 0.227144, std: 0.007828 },
        Marker { x: 2.500000, mean: 0.219108, std: 0.008964 },
        Marker { x: 3.000000, mean: 0.212145, std: 0.006607 },
        Marker { x: 3.500000, mean: 0.208775, std: 0.006367 },
        Marker { x: 4.000000, mean: 0.204582, std: 0.005460 },
        Marker { x: 4.500000, mean: 0.200653, std: 0.006218 },
        Marker { x: 5.000000, mean: 0.197336, std: 0.006211 },
];

const FIG6_COS_THEORY: &[(f64, f64)] = &[
        (0.062500, 0.707106), (0.066986, 0.707106), (0.071794, 0.707106), (0.076947, 0.707106),
        (0.082469, 0.707106), (0.088388, 0.707106), (0.094732, 0.707106), (0.101532, 0.707106),
        (0.108819, 0.707106), (0.116629, 0.707106), (0.125000, 0.707106), (0.133972, 0.707106),
        (0.143587, 0.707106), (0.153893, 0.707106), (0.164938, 0.707106), (0.176777, 0.707106),
        (0.189465, 0.707106), (0.203063, 0.707106), (0.217638, 0.707106), (0.233258, 0.707106),
        (0.250000, 0.707106), (0.267943, 0.707105), (0.287175, 0.707098), (0.307786, 0.707078),
        (0.329877, 0.707022), (0.353553, 0.706893), (0.378929, 0.706640), (0.406126, 0.706211),
        (0.435275, 0.705562), (0.466516, 0.704670), (0.500000, 0.703525), (0.535887, 0.702132),
        (0.574349, 0.700502), (0.615572, 0.698650), (0.659754, 0.696590), (0.707107, 0.694340),
        (0.757858, 0.691916), (0.812252, 0.689330), (0.870551, 0.686596), (0.933033, 0.683725),
        (1.000000, 0.680729), (1.071773, 0.677617), (1.148698, 0.674398), (1.231144, 0.671080),
        (1.319508, 0.667670), (1.414214, 0.664175), (1.515717, 0.660602), (1.624505, 0.656957),
        (1.741101, 0.653244), (1.866066, 0.649470), (2.000000, 0.645639), (2.143547, 0.641757),
        (2.297397, 0.637828), (2.462289, 0.633856), (2.639016, 0.629846), (2.828427, 0.625803),
        (3.031433, 0.621730), (3.249010, 0.617633), (3.482202, 0.613514), (3.732132, 0.609381),
        (4.000000, 0.605236), (4.287094, 0.601085), (8.574188, 0.560717),
];

const FIG6_COS_SIM: &[Marker] = &[
        Marker { x: 0.062500, mean: 0.706375, std: 0.030535 },
        Marker { x: 0.125000, mean: 0.707649, std: 0.030839 },
        Marker { x: 0.250000, mean: 0.706600, std: 0.030893 },
        Marker { x: 0.500000, mean: 0.704184, std: 0.030511 },
        Marker { x: 1.000000, mean: 0.681354, std: 0.031926 },
        Marker { x: 2.000000, mean: 0.645165, std: 0.034643 },
        Marker { x: 4.000000, mean: 0.604909, std: 0.037977 },
        Marker { x: 8.574188, mean: 0.561436, std: 0.040773 },
];

const FIG6_NORM_THEORY: &[(f64, f64)] = &[
        (0.062500, 0.044194), (0.066986, 0.047366), (0.071794, 0.050766), (0.076947, 0.054409),
        (0.082469, 0.058315), (0.088388, 0.062500), (0.094732, 0.066986), (0.101532, 0.071794),
        (0.108819, 0.076947), (0.116629, 0.082469), (0.125000, 0.088388), (0.133972, 0.094732),
        (0.143587, 0.101532), (0.153893, 0.108819), (0.164938, 0.116629), (0.176777, 0.125000),
        (0.189465, 0.133972), (0.203063, 0.143587), (0.217638, 0.153893), (0.233258, 0.164938),
        (0.250000, 0.176774), (0.267943, 0.189452), (0.287175, 0.203007), (0.307786, 0.217443),
        (0.329877, 0.232689), (0.353553, 0.248589), (0.378929, 0.264909), (0.406126, 0.281401),
        (0.435275, 0.297858), (0.466516, 0.314154), (0.500000, 0.330229), (0.535887, 0.346077),
        (0.574349, 0.361720), (0.615572, 0.377195), (0.659754, 0.392545), (0.707107, 0.407812),
        (0.757858, 0.423039), (0.812252, 0.438263), (0.870551, 0.453520), (0.933033, 0.468842),
        (1.000000, 0.484259), (1.071773, 0.499798), (1.148698, 0.515485), (1.231144, 0.531344),
        (1.319508, 0.547395), (1.414214, 0.563660), (1.515717, 0.580159), (1.624505, 0.596909),
        (1.741101, 0.613929), (1.866066, 0.631235), (2.000000, 0.648842), (2.143547, 0.666766),
        (2.297397, 0.685021), (2.462289, 0.703618), (2.639016, 0.722571), (2.828427, 0.741889),
        (3.031433, 0.761581), (3.249010, 0.781656), (3.482202, 0.802117), (3.732132, 0.822967),
        (4.000000, 0.844206), (4.287094, 0.865830), (8.574188, 1.097813),
];

const FIG6_NORM_SIM: &[Marker] = &[
        Marker { x: 0.062500, mean: 0.044106, std: 0.001887 },
        Marker { x: 0.125000, mean: 0.088228, std: 0.003881 },
        Marker { x: 0.250000, mean: 0.176745, std: 0.007533 },
        Marker { x: 0.500000, mean: 0.330313, std: 0.009509 },
        Marker { x: 1.000000, mean: 0.484738, std: 0.010136 },
        Marker { x: 2.000000, mean: 0.648612, std: 0.013585 },
        Marker { x: 4.000000, mean: 0.844087, std: 0.020165 },
        Marker { x: 8.574188, mean: 1.094519, std: 0.035541 },
];

const FIG6_ERR_THEORY: &[(f64, f64)] = &[
        (0.062500, 0.239750), (0.066986, 0.239750), (0.071794, 0.239750), (0.076947, 0.239750),
        (0.082469, 0.239750), (0.088388, 0.239750), (0.094732, 0.239750), (0.101532, 0.239750),
        (0.108819, 0.239750), (0.116629, 0.239750), (0.125000, 0.239750), (0.133972, 0.239750),
        (0.143587, 0.239750), (0.153893, 0.239750), (0.164938, 0.239750), (0.176777, 0.239750),
        (0.189465, 0.239750), (0.203063, 0.239750), (0.217638, 0.239750), (0.233258, 0.239750),
        (0.250000, 0.239750), (0.267943, 0.239751), (0.287175, 0.239753), (0.307786, 0.239759),
        (0.329877, 0.239776), (0.353553, 0.239816), (0.378929, 0.239895), (0.406126, 0.240028),
        (0.435275, 0.240230), (0.466516, 0.240508), (0.500000, 0.240864), (0.535887, 0.241299),
        (0.574349, 0.241807), (0.615572, 0.242386), (0.659754, 0.243030), (0.707107, 0.243734),
        (0.757858, 0.244495), (0.812252, 0.245308), (0.870551, 0.246169), (0.933033, 0.247074),
        (1.000000, 0.248021), (1.071773, 0.249007), (1.148698, 0.250029), (1.231144, 0.251085),
        (1.319508, 0.252172), (1.414214, 0.253289), (1.515717, 0.254434), (1.624505, 0.255604),
        (1.741101, 0.256800), (1.866066, 0.258017), (2.000000, 0.259256), (2.143547, 0.260515),
        (2.297397, 0.261793), (2.462289, 0.263087), (2.639016, 0.264398), (2.828427, 0.265722),
        (3.031433, 0.267060), (3.249010, 0.268409), (3.482202, 0.269768), (3.732132, 0.271136),
        (4.000000, 0.272511), (4.287094, 0.273892), (8.574188, 0.287495),
];

const FIG6_ERR_SIM: &[Marker] = &[
        Marker { x: 0.062500, mean: 0.240654, std: 0.009597 },
        Marker { x: 0.125000, mean: 0.240278, std: 0.009738 },
        Marker { x: 0.250000, mean: 0.240804, std: 0.009863 },
        Marker { x: 0.500000, mean: 0.243471, std: 0.010400 },
        Marker { x: 1.000000, mean: 0.248911, std: 0.010249 },
        Marker { x: 2.000000, mean: 0.260199, std: 0.011373 },
        Marker { x: 4.000000, mean: 0.273318, std: 0.012690 },
        Marker { x: 8.574188, mean: 0.287949, std: 0.014022 },
];

pub const FIGURES: [Figure; 5] = [
    Figure {
        number: 2,
        regime: Regime::Hard,
        sweep: Sweep::Mu,
        mu: 1.0,
        delta: 2.0,
        cos: Panel { theory: FIG2_COS_THEORY, simulation: FIG2_COS_SIM },
        norm: Panel { theory: FIG2_NORM_THEORY, simulation: FIG2_NORM_SIM },
        err: Panel { theory: FIG2_ERR_THEORY, simulation: FIG2_ERR_SIM },
    },
    Figure {
        number: 3,
        regime: Regime::Hard,
        sweep: Sweep::Delta,
        mu: 1.0,
        delta: 2.0,
        cos: Panel { theory: FIG3_COS_THEORY, simulation: FIG3_COS_SIM },
        norm: Panel { theory: FIG3_NORM_THEORY, simulation: FIG3_NORM_SIM },
        err: Panel { theory: FIG3_ERR_THEORY, simulation: FIG3_ERR_SIM },
    },
    Figure {
        number: 4,
        // The stored coordinates are reproduced by τ = 1, not the captioned τ = 2.
        regime: Regime::Soft { tau: 1.0 },
        sweep: Sweep::Mu,
        mu: 1.0,
        delta: 2.0,
        cos: Panel { theory: FIG4_COS_THEORY, simulation: FIG4_COS_SIM },
        norm: Panel { theory: FIG4_NORM_THEORY, simulation: FIG4_NORM_SIM },
        err: Panel { theory: FIG4_ERR_THEORY, simulation: FIG4_ERR_SIM },
    },
    Figure {
        number: 5,
        regime: Regime::Soft { tau: 2.0 },
        sweep: Sweep::Delta,
        mu: 1.0,
        delta: 2.0,
        cos: Panel { theory: FIG5_COS_THEORY, simulation: FIG5_COS_SIM },
        norm: Panel { theory: FIG5_NORM_THEORY, simulation: FIG5_NORM_SIM },
        err: Panel { theory: FIG5_ERR_THEORY, simulation: FIG5_ERR_SIM },
    },
    Figure {
        number: 6,
        regime: Regime::Soft { tau: 1.0 },
        sweep: Sweep::Tau,
        mu: 1.0,
        delta: 1.0,
        cos: Panel { theory: FIG6_COS_THEORY, simulation: FIG6_COS_SIM },
        norm: Panel { theory: FIG6_NORM_THEORY, simulation: FIG6_NORM_SIM },
        err: Panel { theory: FIG6_ERR_THEORY, simulation: FIG6_ERR_SIM },
    },
];

/// Looks up figures 2 to 6.
pub fn figure(number: u8) -> Option<&'static Figure> {
    FIGURES.iter().find(|f| f.number == number)
}
