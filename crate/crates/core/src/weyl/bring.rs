//! The ring `B = ⊕_J hom(A, ι_J A)`, realized inside `k[z]`: the degree-`J`
//! part is `h_J·k[z]`, and the product is `(f@I)·(g@J) = (fg/h_{I∩J})@(I⊕J)`.
//! The map `x_n ↦ b_n = h_{n}@{n}` identifies `C` with `B`.

use std::fmt;

use crate::cring::CElement;
use crate::error::{Error, Result};
use crate::foundation::{h_poly, FinSet, Poly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BElem {
    j: FinSet,
    f: Poly,
}

impl BElem {
    /// `f@J`; requires `h_J | f`.
    pub fn new(f: Poly, j: FinSet) -> Result<Self> {
        if !h_poly(&j).divides(&f) {
            return Err(Error::InvalidArgument(format!(
                "{f} is not divisible by h_{j}, so it is not in B_{j}"
            )));
        }
        Ok(BElem { j, f })
    }

    pub fn one() -> Self {
        BElem {
            j: FinSet::empty(),
            f: Poly::one(),
        }
    }

    /// `b_J`, the free generator `h_J@J` of `B_J`.
    pub fn generator(j: FinSet) -> Self {
        BElem { f: h_poly(&j), j }
    }

    pub fn degree(&self) -> &FinSet {
        &self.j
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    pub fn mul(&self, other: &BElem) -> Result<BElem> {
        let f = (&self.f * &other.f)
            .div_exact(&h_poly(&self.j.intersect(&other.j)))
            .map_err(|e| Error::Consistency(format!("B product {self} * {other}: {e}")))?;
        Ok(BElem {
            j: self.j.xor(&other.j),
            f,
        })
    }
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})@{}", self.f.compact(), self.j)
    }
}

impl fmt::Debug for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BElem({self})")
    }
}

/// `a(z)·x_J ↦ (a·h_J)@J`, one entry per homogeneous component.
pub fn b_from_c(c: &CElement) -> Vec<BElem> {
    c.terms()
        .map(|(j, a)| BElem {
            f: a * &h_poly(j),
            j: j.clone(),
        })
        .collect()
}

pub fn c_from_b(p: &BElem) -> Result<CElement> {
    Ok(CElement::term(p.f.div_exact(&h_poly(&p.j))?, p.j.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs;

    #[test]
    fn product_examples() {
        let b1 = BElem::generator(fs![1]);
        assert_eq!(b1.mul(&b1).unwrap(), BElem::new(Poly::linear_root(1), fs![]).unwrap());
        let b2 = BElem::generator(fs![2]);
        assert_eq!(b1.mul(&b2).unwrap(), BElem::generator(fs![1, 2]));
        let f = BElem::new(Poly::from_ints(&[-6, 1, 1]), fs![2]).unwrap();
        assert_eq!(BElem::one().mul(&f).unwrap(), f);
    }

    #[test]
    fn divisibility_enforced() {
        assert!(BElem::new(Poly::z(), fs![1]).is_err());
        assert!(BElem::new(Poly::zero(), fs![1]).is_ok());
    }

    #[test]
    fn conversion_with_c() {
        assert_eq!(b_from_c(&CElement::x(1)), vec![BElem::generator(fs![1])]);
        assert_eq!(
            b_from_c(&CElement::from_poly(Poly::z())),
            vec![BElem::new(Poly::z(), fs![]).unwrap()]
        );
        let c = &CElement::term(Poly::from_ints(&[2, 1]), fs![1, 3]) + &CElement::x(-4);
        let back = b_from_c(&c)
            .iter()
            .map(|b| c_from_b(b).unwrap())
            .fold(CElement::zero(), |acc, t| &acc + &t);
        assert_eq!(back, c);
    }

    #[test]
    fn display() {
        assert_eq!(BElem::generator(fs![1]).to_string(), "(z-1)@{1}");
    }
}
