//! The graded right ideals `ι_J A`, whose degree-zero parts are `h_J·k[z]`.

use crate::foundation::{FinSet, Poly};

use super::algebra::WeylElem;

/// Homogeneous generators of `ι_n A`: `x` for `n = 0`, `y` for `n = 1`,
/// `y^n, z - n` for `n ≥ 2` and `x^{1-n}, z - n` for `n ≤ -1`.
pub fn iota_ideal(n: i64) -> Vec<WeylElem> {
    let z_minus_n = WeylElem::from_poly(Poly::linear_root(n));
    match n {
        0 => vec![WeylElem::x()],
        1 => vec![WeylElem::y()],
        n if n >= 2 => vec![WeylElem::term(-n, Poly::one()), z_minus_n],
        n => vec![WeylElem::term(1 - n, Poly::one()), z_minus_n],
    }
}

/// Monic `g` with `(ι_n A)_m = m_m·g·k[z]`.
fn single_component(n: i64, m: i64) -> Poly {
    iota_ideal(n).iter().fold(Poly::zero(), |acc, gen| {
        let deg = gen.is_homogeneous().expect("generators are homogeneous");
        let product = gen * &WeylElem::term(m - deg, Poly::one());
        acc.gcd(&product.component(m))
    })
}

/// Monic `g` with `(ι_J A)_m = m_m·g·k[z]`, where `ι_J A = ⋂_{j∈J} ι_j A`.
pub fn iota_component(j: &FinSet, m: i64) -> Poly {
    j.iter()
        .fold(Poly::one(), |acc, n| acc.lcm(&single_component(n, m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::h_poly;
    use crate::fs;

    #[test]
    fn generator_examples() {
        assert_eq!(iota_ideal(0), vec![WeylElem::x()]);
        assert_eq!(iota_ideal(1), vec![WeylElem::y()]);
        assert_eq!(
            iota_ideal(3),
            vec![WeylElem::y().pow(3), WeylElem::from_poly(Poly::linear_root(3))]
        );
        assert_eq!(iota_ideal(-2)[0], WeylElem::x().pow(3));
    }

    #[test]
    fn component_examples() {
        assert_eq!(iota_component(&fs![4], 0), Poly::linear_root(4));
        assert_eq!(iota_component(&fs![], 7), Poly::one());
        assert_eq!(iota_component(&fs![0], 1), Poly::one());
        assert_eq!(iota_component(&fs![0], -1), Poly::linear_root(-1));
    }

    #[test]
    fn degree_zero_part_is_h() {
        for n in -10..=10 {
            assert_eq!(iota_component(&fs![n], 0), Poly::linear_root(n), "n = {n}");
        }
        let j = fs![-3, 0, 2, 5];
        assert_eq!(iota_component(&j, 0), h_poly(&j));
    }
}
