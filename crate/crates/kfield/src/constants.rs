use std::collections::BTreeMap;

use crate::Scalar;

/// The root (−1 + 2√2 i)/3 of 3x² + 2x + 3, from the quadratic formula.
pub fn mu_sporadic() -> Scalar {
    // discriminant 2² − 4·3·3 = −32
    let disc = Scalar::from_i64(-32).sqrt_restricted().expect("sqrt(-32) lies in K");
    (Scalar::from_i64(-2) + disc) * Scalar::from_frac(1, 6)
}

/// α = (μ − μ⁻¹)/2 for the sporadic root μ.
pub fn alpha_sporadic() -> Scalar {
    let mu = mu_sporadic();
    let inv = mu.inverse().expect("mu is nonzero");
    (mu - inv) * Scalar::from_frac(1, 2)
}

/// Named constants, keyed by name.
pub fn constants() -> BTreeMap<&'static str, Scalar> {
    let zeta = Scalar::zeta();
    let mut m = BTreeMap::new();
    m.insert("zeta_inv", zeta.inverse().expect("zeta is nonzero"));
    m.insert("zeta", zeta);
    m.insert("sqrt2", Scalar::sqrt2());
    m.insert("sqrt3", Scalar::sqrt3());
    m.insert("sqrt6", Scalar::sqrt6());
    m.insert("i_unit", Scalar::i());
    m.insert("mu_sporadic", mu_sporadic());
    m.insert("alpha_sporadic", alpha_sporadic());
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_minimal_polynomial() {
        let z = Scalar::zeta();
        assert!((&z * &z - &z + Scalar::one()).is_zero());
    }

    #[test]
    fn sporadic_root_satisfies_quadratic() {
        let mu = mu_sporadic();
        let v = Scalar::from_i64(3) * &mu * &mu + Scalar::from_i64(2) * &mu + Scalar::from_i64(3);
        assert!(v.is_zero());
        let expect = (Scalar::from_i64(-1) + Scalar::from_i64(2) * Scalar::sqrt2() * Scalar::i())
            * Scalar::from_frac(1, 3);
        assert_eq!(mu, expect);
    }

    #[test]
    fn vieta_product_of_roots() {
        let mu = mu_sporadic();
        assert!((&mu * mu.conj()).is_one());
    }

    #[test]
    fn one_minus_zeta_is_zeta_inverse() {
        let c = constants();
        assert_eq!(Scalar::one() - &c["zeta"], c["zeta_inv"]);
    }

    #[test]
    fn alpha_identities() {
        let mu = mu_sporadic();
        let a = alpha_sporadic();
        // 2αμ = μ² − 1
        assert_eq!(Scalar::from_i64(2) * &a * &mu, &mu * &mu - Scalar::one());
        // with 3μ² + 2μ + 3 = 0, α = μ + 1/3
        assert_eq!(a, mu + Scalar::from_frac(1, 3));
    }

    #[test]
    fn table_has_all_names() {
        let names: Vec<_> = constants().keys().copied().collect();
        assert_eq!(
            names,
            ["alpha_sporadic", "i_unit", "mu_sporadic", "sqrt2", "sqrt3", "sqrt6", "zeta", "zeta_inv"]
        );
    }
}
