use std::sync::OnceLock;

use num_complex::Complex64;

use super::{det3, Mat3};

/// Double-precision complex number.
pub type ComplexF = Complex64;

/// The zeros of `x³ − x − 1`: the real plastic number and a conjugate pair.
///
/// `beta` is the member of the pair in the upper half-plane, which makes the
/// Vandermonde determinant of rows `(r², r, 1)` equal to `+i√23`.
#[derive(Clone, Copy, Debug)]
pub struct CubicRoots {
    pub alpha: f64,
    pub beta: ComplexF,
    pub gamma: ComplexF,
}

impl CubicRoots {
    pub fn all(&self) -> [ComplexF; 3] {
        [ComplexF::new(self.alpha, 0.0), self.beta, self.gamma]
    }
}

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

fn newton_plastic() -> f64 {
    let mut x = 1.5f64;
    for _ in 0..NEWTON_MAX_ITER {
        let step = (x * x * x - x - 1.0) / (3.0 * x * x - 1.0);
        x -= step;
        if step.abs() < NEWTON_TOL {
            break;
        }
    }
    x
}

/// Roots are computed once and cached.
pub fn cubic_roots() -> CubicRoots {
    static ROOTS: OnceLock<CubicRoots> = OnceLock::new();
    *ROOTS.get_or_init(|| {
        let alpha = newton_plastic();
        // x³ − x − 1 = (x − α)(x² + αx + α² − 1); the quadratic has
        // discriminant α² − 4(α² − 1) = 4 − 3α² < 0.
        let half_im = (3.0 * alpha * alpha - 4.0).sqrt() / 2.0;
        let beta = ComplexF::new(-alpha / 2.0, half_im);
        CubicRoots {
            alpha,
            beta,
            gamma: beta.conj(),
        }
    })
}

/// `det [[r₀², r₀, 1], [r₁², r₁, 1], [r₂², r₂, 1]]`.
pub fn vandermonde_det(roots: &[ComplexF; 3]) -> ComplexF {
    let one = ComplexF::new(1.0, 0.0);
    det3(&Mat3::from_fn(|i, j| match j {
        0 => roots[i] * roots[i],
        1 => roots[i],
        _ => one,
    }))
}
