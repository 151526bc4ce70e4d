use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("scalar kind mismatch: rational and float values cannot be mixed")]
    KindMismatch,
    #[error("zero paravector has no inverse")]
    ZeroParavector,
    #[error("vector part has irrational modulus {0}; exact slice decomposition unavailable")]
    IrrationalModulus(String),
    #[error("x lies on the singular sphere of s (distance {distance:e})")]
    SingularSphere { distance: f64 },
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("series diverges: |x|/|s| = {ratio} is not below 1")]
    SeriesDivergent { ratio: f64 },
    #[error("s is in the S-spectrum: |det Q_c,s(T)| = {det:e}")]
    SpectralSingularity { det: f64 },
    #[error("spectral safety: contour meets the spectrum: min |det| over nodes = {min_det:e} (threshold {threshold:e}, node {node})")]
    ContourIntersectsSpectrum { min_det: f64, threshold: f64, node: usize },
    #[error("spectral safety: contour does not enclose the spectral trace ({u}, {v})")]
    ContourMissesSpectrum { u: f64, v: f64 },
    #[error("quadrature not converged: N vs 2N delta {delta:e} exceeds {tolerance:e}")]
    NonConvergent { delta: f64, tolerance: f64 },
    #[error("gamma ratio hits a pole at {0}")]
    GammaPole(String),
    #[error("sqrt(pi) factor did not cancel (residual power {0})")]
    UnmatchedSqrtPi(i32),
    #[error("operator components do not commute")]
    NotCommuting,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
