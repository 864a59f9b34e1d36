//! The Grothendieck group of integral polytopes.
//!
//! An element is a formal difference `pos - neg`. No canonical representative
//! is ever computed: two elements are equal when their cross sums are
//! translates of each other, which is sound and complete because Minkowski
//! addition of polytopes is cancellative.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::lattice::{Direction, IntegralPolytope, LatticeError, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrothError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A formal difference of two integral polytopes of the same dimension.
#[derive(Debug, Clone)]
pub struct GrothElement {
    pos: IntegralPolytope,
    neg: IntegralPolytope,
}

fn same_dim(a: usize, b: usize) -> Result<(), GrothError> {
    if a == b {
        Ok(())
    } else {
        Err(LatticeError::DimensionMismatch { left: a, right: b }.into())
    }
}

impl GrothElement {
    pub fn new(pos: IntegralPolytope, neg: IntegralPolytope) -> Result<Self, GrothError> {
        same_dim(pos.dim(), neg.dim())?;
        Ok(GrothElement { pos, neg })
    }

    /// The class of a single polytope, `(P, point)`.
    pub fn from_polytope(p: IntegralPolytope) -> Self {
        let neg = IntegralPolytope::origin(p.dim());
        GrothElement { pos: p, neg }
    }

    /// Minus a polytope, `(point, P)`.
    pub fn minus_polytope(p: IntegralPolytope) -> Self {
        GrothElement::from_polytope(p).neg()
    }

    pub fn zero(dim: usize) -> Self {
        GrothElement::from_polytope(IntegralPolytope::origin(dim))
    }

    pub fn dim(&self) -> usize {
        self.pos.dim()
    }

    pub fn pos(&self) -> &IntegralPolytope {
        &self.pos
    }

    pub fn neg_part(&self) -> &IntegralPolytope {
        &self.neg
    }

    /// `(P,Q) ~ (P',Q')` iff `P + Q'` is a translate of `P' + Q`.
    pub fn g_equal(&self, other: &GrothElement) -> Result<bool, GrothError> {
        same_dim(self.dim(), other.dim())?;
        let left = self.pos.minkowski_sum(&other.neg)?;
        let right = other.pos.minkowski_sum(&self.neg)?;
        Ok(left.translation_eq(&right))
    }

    pub fn add(&self, other: &GrothElement) -> Result<GrothElement, GrothError> {
        same_dim(self.dim(), other.dim())?;
        Ok(GrothElement {
            pos: self.pos.minkowski_sum(&other.pos)?,
            neg: self.neg.minkowski_sum(&other.neg)?,
        })
    }

    pub fn sub(&self, other: &GrothElement) -> Result<GrothElement, GrothError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GrothElement {
        GrothElement {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// Integer multiple; negative factors dilate by `|k|` and negate.
    pub fn scale(&self, k: &BigInt) -> GrothElement {
        let scaled = GrothElement {
            pos: self.pos.dilate(&k.abs()),
            neg: self.neg.dilate(&k.abs()),
        };
        if k.is_negative() {
            scaled.neg()
        } else {
            scaled
        }
    }

    /// The bar operation: both components reflected through the origin.
    pub fn mirror(&self) -> GrothElement {
        GrothElement {
            pos: self.pos.mirror(),
            neg: self.neg.mirror(),
        }
    }

    /// `E + mirror(E)`, i.e. twice the symmetrization.
    pub fn symmetrize_double(&self) -> GrothElement {
        self.add(&self.mirror()).expect("same dimension")
    }

    pub fn thickness(&self, phi: &Direction) -> Result<BigInt, GrothError> {
        Ok(self.pos.thickness(phi)? - self.neg.thickness(phi)?)
    }

    /// A polytope `R` with `self ~ (R, point)`, if one exists (dimension <= 2).
    pub fn as_polytope(&self) -> Result<Option<IntegralPolytope>, GrothError> {
        Ok(self.pos.erode(&self.neg)?)
    }

    pub fn is_polytope(&self) -> Result<bool, GrothError> {
        Ok(self.as_polytope()?.is_some())
    }

    /// Pushforward along an integer matrix with `dim` columns.
    pub fn push(&self, matrix: &[Vec<BigInt>]) -> Result<GrothElement, GrothError> {
        Ok(GrothElement {
            pos: self.pos.push(matrix)?,
            neg: self.neg.push(matrix)?,
        })
    }

    /// `a_*(EA) + b_*(EB) - c_*(EC)` for an amalgamated product.
    pub fn amalgam(
        ea: &GrothElement,
        eb: &GrothElement,
        ec: &GrothElement,
        la: &[Vec<BigInt>],
        lb: &[Vec<BigInt>],
        lc: &[Vec<BigInt>],
    ) -> Result<GrothElement, GrothError> {
        ea.push(la)?.add(&eb.push(lb)?)?.sub(&ec.push(lc)?)
    }

    /// `i_*(EK) * chi` for a fibration with fibre group `K` and base Euler
    /// characteristic `chi`.
    pub fn fibration_scale(
        ek: &GrothElement,
        inclusion: &[Vec<BigInt>],
        chi: &BigInt,
    ) -> Result<GrothElement, GrothError> {
        Ok(ek.push(inclusion)?.scale(chi))
    }

    /// Checks `E = (-1)^(n+1) * mirror(E)`.
    pub fn duality_holds(&self, n: i64) -> bool {
        let sign = if (n + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        self.g_equal(&self.mirror().scale(&BigInt::from(sign)))
            .expect("same dimension")
    }

    /// Whether `phi` and `psi` have the same minimal faces on both
    /// components of this representative.
    pub fn s_equivalent(&self, phi: &Direction, psi: &Direction) -> Result<bool, GrothError> {
        let same = |p: &IntegralPolytope| -> Result<bool, GrothError> {
            let mut a = p.min_face(phi)?;
            let mut b = p.min_face(psi)?;
            a.sort();
            b.sort();
            Ok(a == b)
        };
        Ok(same(&self.pos)? && same(&self.neg)?)
    }

    pub fn translate(&self, v: &LatticePoint) -> GrothElement {
        GrothElement {
            pos: self.pos.translate(v),
            neg: self.neg.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pos.translation_eq(&self.neg)
    }
}

impl PartialEq for GrothElement {
    fn eq(&self, other: &Self) -> bool {
        self.g_equal(other).unwrap_or(false)
    }
}

impl fmt::Display for GrothElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] - [{}]", self.pos, self.neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[[i64; 2]]) -> IntegralPolytope {
        IntegralPolytope::from_i64(v).unwrap()
    }

    fn interval(a: i64, b: i64) -> IntegralPolytope {
        IntegralPolytope::from_i64(&[[a], [b]]).unwrap()
    }

    fn dir(v: &[i64]) -> Direction {
        Direction::from_i64(v).unwrap()
    }

    fn square() -> IntegralPolytope {
        poly(&[[0, 0], [1, 0], [1, 1], [0, 1]])
    }

    fn ident1() -> Vec<Vec<BigInt>> {
        vec![vec![BigInt::from(1)]]
    }

    #[test]
    fn equality_examples() {
        let a = GrothElement::from_polytope(square());
        let b = GrothElement::from_polytope(square().translate(&[5, -2].into()));
        assert!(a.g_equal(&b).unwrap());
        let p = poly(&[[0, 0], [2, 1], [1, 3]]);
        let s = poly(&[[0, 0], [1, 0], [0, 2]]);
        let e = GrothElement::new(p.minkowski_sum(&s).unwrap(), s).unwrap();
        assert!(e.g_equal(&GrothElement::from_polytope(p)).unwrap());
        assert!(!a.g_equal(&a.neg()).unwrap());
        let line = GrothElement::zero(1);
        assert!(a.g_equal(&line).is_err());
    }

    #[test]
    fn group_laws_examples() {
        let e = GrothElement::new(square(), poly(&[[0, 0], [3, 1]])).unwrap();
        assert!(e.add(&e.neg()).unwrap().is_zero());
        let t = GrothElement::minus_polytope(interval(0, 1));
        assert!(t
            .add(&GrothElement::from_polytope(interval(0, 1)))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn scale_examples() {
        let e = GrothElement::new(square(), poly(&[[0, 0], [1, 2]])).unwrap();
        assert!(e.scale(&1.into()).g_equal(&e).unwrap());
        assert!(e.scale(&0.into()).is_zero());
        let twice = e.add(&e).unwrap();
        assert!(e.scale(&2.into()).g_equal(&twice).unwrap());
        assert!(e.scale(&(-2).into()).g_equal(&twice.neg()).unwrap());
    }

    #[test]
    fn symmetrize_examples() {
        let pt = GrothElement::zero(2);
        assert!(pt.symmetrize_double().is_zero());
        let seg = GrothElement::from_polytope(poly(&[[0, 0], [2, 0]]));
        let sym = seg.symmetrize_double();
        assert!(sym
            .g_equal(&GrothElement::from_polytope(poly(&[[-2, 0], [2, 0]])))
            .unwrap());
        let t = GrothElement::minus_polytope(interval(0, 1));
        assert!(t
            .symmetrize_double()
            .g_equal(&GrothElement::minus_polytope(interval(0, 2)))
            .unwrap());
        let e = GrothElement::new(poly(&[[0, 0], [2, 1], [1, 3]]), square()).unwrap();
        let s = e.symmetrize_double();
        assert!(s.g_equal(&s.mirror()).unwrap());
    }

    #[test]
    fn thickness_examples() {
        let t = GrothElement::minus_polytope(interval(0, 1));
        assert_eq!(t.thickness(&dir(&[1])).unwrap(), (-1).into());
        assert_eq!(GrothElement::zero(2).thickness(&dir(&[1, 1])).unwrap(), 0.into());
    }

    #[test]
    fn is_polytope_examples() {
        let e = GrothElement::new(interval(0, 2), interval(0, 1)).unwrap();
        let r = e.as_polytope().unwrap().unwrap();
        assert!(r.translation_eq(&interval(0, 1)));
        let t = GrothElement::minus_polytope(interval(0, 1));
        assert!(!t.is_polytope().unwrap());
        assert!(t.neg().is_polytope().unwrap());
        let e = GrothElement::new(poly(&[[0, 0], [2, 0]]), poly(&[[0, 0], [0, 1]])).unwrap();
        assert!(!e.is_polytope().unwrap());
        assert!(!e.neg().is_polytope().unwrap());
        let cube = IntegralPolytope::unit_cube(3);
        assert!(GrothElement::from_polytope(cube).is_polytope().is_err());
    }

    #[test]
    fn fibration_scale_examples() {
        let t = GrothElement::minus_polytope(interval(0, 1));
        let a = GrothElement::fibration_scale(&t, &ident1(), &(-2).into()).unwrap();
        assert!(a.g_equal(&GrothElement::from_polytope(interval(0, 2))).unwrap());
        let b = GrothElement::fibration_scale(&t, &ident1(), &8.into()).unwrap();
        assert!(b
            .g_equal(&GrothElement::minus_polytope(interval(0, 8)))
            .unwrap());
        let z = GrothElement::fibration_scale(&t, &ident1(), &0.into()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn amalgam_difference_of_intervals() {
        // A = <s> x F3 and B = <t> x (F3 x F5) glued along Z: the result is a
        // difference of two intervals in the plane spanned by s and t.
        let t = GrothElement::minus_polytope(interval(0, 1));
        let pa = GrothElement::fibration_scale(&t, &ident1(), &(-2).into()).unwrap();
        let pb = GrothElement::fibration_scale(&t, &ident1(), &8.into()).unwrap();
        let pc = GrothElement::zero(1);
        let la = vec![vec![BigInt::from(1)], vec![BigInt::from(0)]];
        let lb = vec![vec![BigInt::from(0)], vec![BigInt::from(1)]];
        let g = GrothElement::amalgam(&pa, &pb, &pc, &la, &lb, &la).unwrap();
        assert!(!g.is_polytope().unwrap());
        assert!(!g.neg().is_polytope().unwrap());
        assert_eq!(g.thickness(&dir(&[1, 0])).unwrap(), 2.into());
        assert_eq!(g.thickness(&dir(&[0, 1])).unwrap(), (-8).into());
    }

    #[test]
    fn push_functorial() {
        let e = GrothElement::new(poly(&[[0, 0], [2, 1], [1, 3]]), square()).unwrap();
        let l1 = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(-1)],
            vec![BigInt::from(3), BigInt::from(1)],
        ];
        let l2 = vec![vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)]];
        let composed: Vec<Vec<BigInt>> = l2
            .iter()
            .map(|row| {
                (0..2)
                    .map(|j| row.iter().zip(&l1).map(|(a, r)| a * &r[j]).sum())
                    .collect()
            })
            .collect();
        let left = e.push(&l1).unwrap().push(&l2).unwrap();
        let right = e.push(&composed).unwrap();
        assert!(left.g_equal(&right).unwrap());
        assert!(e.push(&l2).is_err());
    }

    #[test]
    fn duality_examples() {
        let sym = GrothElement::from_polytope(poly(&[[-1, 0], [1, 0], [0, 1], [0, -1]]));
        assert!(sym.duality_holds(3));
        assert!(!sym.duality_holds(2));
        let tri = GrothElement::from_polytope(poly(&[[0, 0], [1, 0], [0, 1]]));
        assert!(!tri.duality_holds(3));
        assert!(GrothElement::zero(2).duality_holds(2));
    }

    #[test]
    fn s_equivalence_examples() {
        let e = GrothElement::new(square(), GrothElement::zero(2).pos().clone()).unwrap();
        assert!(e.s_equivalent(&dir(&[1, 1]), &dir(&[2, 1])).unwrap());
        assert!(!e.s_equivalent(&dir(&[1, 0]), &dir(&[1, 1])).unwrap());
    }

    #[test]
    fn s_equivalence_depends_on_representative() {
        // (point, point) and (square, square) are the same class, yet only the
        // first representative makes (1,0) and (0,1) S-equivalent.
        let phi = dir(&[1, 0]);
        let psi = dir(&[0, 1]);
        let small = GrothElement::zero(2);
        let big = GrothElement::new(square(), square()).unwrap();
        assert!(small.g_equal(&big).unwrap());
        assert!(small.s_equivalent(&phi, &psi).unwrap());
        assert!(!big.s_equivalent(&phi, &psi).unwrap());
    }
}
