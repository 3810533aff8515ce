use num::complex::Complex64;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DirectSeries,
    EulerMaclaurin,
    ThetaMellin,
    /// Theta-Mellin route through a junk-value branch (the 1/0 = 0
    /// convention fired), e.g. zeta at s = 1.
    ThetaMellinJunk,
    EulerProduct,
    BernoulliFormula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct-series",
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::ThetaMellin => "theta-mellin",
            Method::ThetaMellinJunk => "theta-mellin-junk",
            Method::EulerProduct => "euler-product",
            Method::BernoulliFormula => "bernoulli-formula",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A complex value with an error bound and the route that produced it.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    /// Absolute error: a propagated bound if `rigorous`, otherwise a
    /// heuristic estimate.
    pub err: f64,
    pub rigorous: bool,
    pub method: Method,
}

impl EvalResult {
    pub fn rigorous(value: Complex64, err: f64, method: Method) -> Self {
        EvalResult {
            value,
            err,
            rigorous: true,
            method,
        }
    }

    pub fn heuristic(value: Complex64, err: f64, method: Method) -> Self {
        EvalResult {
            value,
            err,
            rigorous: false,
            method,
        }
    }
}
