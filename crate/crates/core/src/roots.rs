//! Floating-point polynomial roots, generic over the float type.
//!
//! Used only to confirm Weil bounds; every decision that matters (parity,
//! class, squareness) is made in exact integer arithmetic elsewhere.

use num_complex::Complex;
use num_traits::Float;

/// All complex roots of `sum c_i x^i` (lowest degree first, nonzero leading
/// coefficient) by Aberth-Ehrlich iteration.
pub fn polynomial_roots<T: Float>(coeffs: &[T]) -> Vec<Complex<T>> {
    let mut c: Vec<T> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = *c.last().unwrap();
    let monic: Vec<Complex<T>> = c.iter().map(|&x| Complex::new(x / lead, T::zero())).collect();
    let deriv: Vec<Complex<T>> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &x)| x * T::from(i).unwrap())
        .collect();

    // Cauchy radius for the starting circle.
    let radius = T::one()
        + monic[..n]
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| a.max(b));
    let two_pi = T::from(std::f64::consts::TAU).unwrap();
    let offset = T::from(0.4).unwrap();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let theta = two_pi * T::from(k).unwrap() / T::from(n).unwrap() + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let eval = |p: &[Complex<T>], x: Complex<T>| {
        p.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &a| acc * x + a)
    };
    let tol = T::epsilon() * T::from(16.0).unwrap();
    for _ in 0..500 {
        let mut max_step = T::zero();
        for i in 0..n {
            let pz = eval(&monic, z[i]);
            let dz = eval(&deriv, z[i]);
            if pz.norm().is_zero() {
                continue;
            }
            let ratio = pz / dz;
            let mut repulsion = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if !d.norm().is_zero() {
                        repulsion = repulsion + Complex::new(T::one(), T::zero()) / d;
                    }
                }
            }
            let step = ratio / (Complex::new(T::one(), T::zero()) - ratio * repulsion);
            z[i] = z[i] - step;
            max_step = max_step.max(step.norm() / (T::one() + z[i].norm()));
        }
        if max_step < tol {
            break;
        }
    }
    z
}

/// Largest relative deviation `| |root| / target - 1 |` over all roots.
pub fn max_modulus_defect<T: Float>(roots: &[Complex<T>], target: T) -> T {
    roots
        .iter()
        .map(|r| (r.norm() / target - T::one()).abs())
        .fold(T::zero(), |a, b| a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_roots_on_unit_circle() {
        let roots = polynomial_roots(&[1.0f64, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(roots.len(), 4);
        assert!(max_modulus_defect(&roots, 1.0) < 1e-12);
    }

    #[test]
    fn real_roots_recovered_in_f32() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let mut roots: Vec<f32> = polynomial_roots(&[6.0f32, -7.0, 0.0, 1.0])
            .into_iter()
            .map(|z| z.re)
            .collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (r, e) in roots.iter().zip([-3.0f32, 1.0, 2.0]) {
            assert!((r - e).abs() < 1e-4);
        }
    }

    #[test]
    fn weil_type_quartic() {
        // 1 + q^2 t^4 with q = 7: reciprocal roots of modulus sqrt(7)
        let q = 7.0f64;
        let roots = polynomial_roots(&[1.0, 0.0, 0.0, 0.0, q * q]);
        assert!(max_modulus_defect(&roots, 1.0 / q.sqrt()) < 1e-10);
    }
}
