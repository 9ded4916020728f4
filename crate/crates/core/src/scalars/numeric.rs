use num_complex::Complex64;

/// Complex double used by the numeric evaluators only. Real values carry a
/// zero imaginary part.
pub type NumericScalar = Complex64;

/// Caller-supplied comparison tolerance: values agree when
/// `|a - b| <= abs` or `|a - b| <= rel * max(|a|, |b|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }

    pub fn relative(rel: f64) -> Self {
        Tolerance { abs: 0.0, rel }
    }

    pub fn accepts(&self, a: NumericScalar, b: NumericScalar) -> bool {
        let diff = (a - b).norm();
        diff <= self.abs || diff <= self.rel * a.norm().max(b.norm())
    }

    pub fn accepts_real(&self, a: f64, b: f64) -> bool {
        self.accepts(Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_and_absolute() {
        let t = Tolerance::relative(1e-3);
        assert!(t.accepts_real(1000.0, 1000.5));
        assert!(!t.accepts_real(1.0, 1.01));
        let t = Tolerance::absolute(0.1);
        assert!(t.accepts(Complex64::new(0.0, 0.05), Complex64::new(0.0, 0.0)));
    }
}
