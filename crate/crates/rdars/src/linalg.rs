//! Small complex-vector helpers shared by the signal-model modules.

use ndarray::Array1;
use num_complex::Complex64;

/// Hermitian inner product `a^H b`.
pub(crate) fn cdot(a: &Array1<Complex64>, b: &Array1<Complex64>) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Squared Euclidean norm.
pub(crate) fn norm_sq(a: &Array1<Complex64>) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

pub(crate) fn concat(a: &Array1<Complex64>, b: &Array1<Complex64>) -> Array1<Complex64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend(a.iter().copied());
    out.extend(b.iter().copied());
    Array1::from_vec(out)
}

#[cfg(test)]
mod test {
    use super::*;

    #[test]
    fn cdot_conjugates_left() {
        let a = Array1::from_vec(vec![Complex64::new(0.0, 1.0)]);
        let b = Array1::from_vec(vec![Complex64::new(1.0, 0.0)]);
        assert_eq!(cdot(&a, &b), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn norm_sq_matches_cdot() {
        let a = Array1::from_vec(vec![Complex64::new(3.0, 4.0), Complex64::new(-1.0, 2.0)]);
        assert!((norm_sq(&a) - cdot(&a, &a).re).abs() < 1e-14);
    }
}
