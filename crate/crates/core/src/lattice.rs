//! Integral polytopes with exact arithmetic.
//!
//! A polytope is stored as its vertex list. In ambient dimension one the
//! list is sorted, in dimension two it runs counter-clockwise from the
//! lexicographically smallest vertex, and in higher dimensions it is a sorted
//! generating set with every point inside the hull of the others removed.
//! In all cases `points[0]` is the lexicographically smallest vertex, which
//! makes the canonical translate (that vertex moved to the origin) a cheap
//! structural operation.
//!
//! Nothing in this module uses floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::simplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cannot build a polytope from an empty point set")]
    EmptyInput,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("mixed dimensions: expected {expected}, found {found}")]
    MixedDimensions { expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{op} is only supported in dimension <= {max}, got {dim}")]
    UnsupportedDimension {
        op: &'static str,
        dim: usize,
        max: usize,
    },
    #[error("direction must be a nonzero covector")]
    ZeroDirection,
    #[error("matrix has {found} columns, expected {expected}")]
    ShapeMismatch { expected: usize, found: usize },
}

fn check_dims(left: usize, right: usize) -> Result<(), LatticeError> {
    if left == right {
        Ok(())
    } else {
        Err(LatticeError::DimensionMismatch { left, right })
    }
}

/// A point of the integer lattice `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v.into_iter().map(BigInt::from).collect())
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint(v.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A nonzero integral covector, i.e. a rational character on the lattice.
///
/// The coordinates are kept exactly as given; [`Direction::primitive`] and
/// [`Direction::canonical`] produce normal forms when one is needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(Vec<BigInt>);

impl Direction {
    pub fn new(covector: Vec<BigInt>) -> Result<Self, LatticeError> {
        if covector.is_empty() {
            return Err(LatticeError::ZeroDimension);
        }
        if covector.iter().all(Zero::is_zero) {
            return Err(LatticeError::ZeroDirection);
        }
        Ok(Direction(covector))
    }

    pub fn from_i64(covector: &[i64]) -> Result<Self, LatticeError> {
        Direction::new(covector.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn eval(&self, p: &LatticePoint) -> BigInt {
        self.0.iter().zip(&p.0).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Direction {
        Direction(self.0.iter().map(|a| -a).collect())
    }

    /// Divides out the gcd of the entries, keeping the sign.
    pub fn primitive(&self) -> Direction {
        let g = self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        Direction(self.0.iter().map(|c| c / &g).collect())
    }

    /// Primitive form with the first nonzero entry positive.
    pub fn canonical(&self) -> Direction {
        let p = self.primitive();
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c)).is_one()
    }

    /// True if `self` is a positive multiple of `other`.
    pub fn same_ray(&self, other: &Direction) -> bool {
        self.dim() == other.dim() && self.primitive() == other.primitive()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", LatticePoint(self.0.clone()))
    }
}

/// The set of planar directions for which one vertex is the unique maximiser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalCone {
    /// Every nonzero direction (the polytope is a point).
    FullCircle,
    /// The open cone swept counter-clockwise from `from` to `to`. Both
    /// boundary rays are primitive edge normals and are not part of the cone.
    Arc { from: Direction, to: Direction },
}

impl NormalCone {
    /// Strict membership of the ray of `phi` (dimension 2 only).
    pub fn contains(&self, phi: &Direction) -> bool {
        match self {
            NormalCone::FullCircle => true,
            NormalCone::Arc { from, to } => {
                let c_from = cross2(&from.0, &phi.0);
                let c_to = cross2(&phi.0, &to.0);
                let span = cross2(&from.0, &to.0);
                match span.sign() {
                    num_bigint::Sign::Plus => c_from.is_positive() && c_to.is_positive(),
                    num_bigint::Sign::NoSign => {
                        // A half plane: from and to are opposite.
                        c_from.is_positive()
                    }
                    num_bigint::Sign::Minus => {
                        // Reflex cones never arise from convex polygons, but
                        // the predicate stays well defined.
                        !(c_from.is_negative() && c_to.is_negative())
                            && !(c_from.is_zero() && dot2(&from.0, &phi.0).is_positive())
                            && !(c_to.is_zero() && dot2(&to.0, &phi.0).is_positive())
                    }
                }
            }
        }
    }
}

fn cross2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn dot2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1]
}

/// Orientation of `c` relative to the directed line `a -> b`.
fn orient(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> BigInt {
    let ab = b.sub(a);
    let ac = c.sub(a);
    cross2(&ab.0, &ac.0)
}

fn primitive_vec(v: Vec<BigInt>) -> Direction {
    Direction(v).primitive()
}

/// A nonempty convex lattice polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralPolytope {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl IntegralPolytope {
    /// Convex hull of a finite nonempty point set.
    pub fn hull<I>(points: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        let dim = match pts.first() {
            None => return Err(LatticeError::EmptyInput),
            Some(p) => p.dim(),
        };
        if dim == 0 {
            return Err(LatticeError::ZeroDimension);
        }
        if let Some(p) = pts.iter().find(|p| p.dim() != dim) {
            return Err(LatticeError::MixedDimensions {
                expected: dim,
                found: p.dim(),
            });
        }
        pts.sort();
        pts.dedup();
        let points = match dim {
            1 => {
                let lo = pts[0].clone();
                let hi = pts[pts.len() - 1].clone();
                if lo == hi {
                    vec![lo]
                } else {
                    vec![lo, hi]
                }
            }
            2 => hull2(pts),
            _ => prune_interior(pts),
        };
        Ok(IntegralPolytope { dim, points })
    }

    /// Convenience constructor from small integer coordinates.
    pub fn from_i64<P: AsRef<[i64]>>(points: &[P]) -> Result<Self, LatticeError> {
        Self::hull(
            points
                .iter()
                .map(|p| LatticePoint::from(p.as_ref().to_vec())),
        )
    }

    pub fn point(p: LatticePoint) -> Self {
        assert!(p.dim() > 0, "points need a positive ambient dimension");
        IntegralPolytope {
            dim: p.dim(),
            points: vec![p],
        }
    }

    pub fn origin(dim: usize) -> Self {
        Self::point(LatticePoint::origin(dim))
    }

    /// The segment from `a` to `b`.
    pub fn segment(a: LatticePoint, b: LatticePoint) -> Result<Self, LatticeError> {
        Self::hull([a, b])
    }

    /// The unit cube `[0,1]^dim`; in dimension 2 this is the unit square.
    pub fn unit_cube(dim: usize) -> Self {
        let mut acc = Self::origin(dim);
        for i in 0..dim {
            let mut e = vec![0i64; dim];
            e[i] = 1;
            let seg = Self::segment(LatticePoint::origin(dim), e.into()).expect("same dimension");
            acc = acc.minkowski_sum(&seg).expect("same dimension");
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn is_point(&self) -> bool {
        self.points.len() == 1
    }

    /// Lexicographically smallest vertex.
    pub fn lex_min(&self) -> &LatticePoint {
        &self.points[0]
    }

    pub fn translate(&self, v: &LatticePoint) -> IntegralPolytope {
        IntegralPolytope {
            dim: self.dim,
            points: self.points.iter().map(|p| p.add(v)).collect(),
        }
    }

    /// The translate whose lexicographically smallest vertex is the origin.
    pub fn canonical(&self) -> IntegralPolytope {
        self.translate(&self.points[0].neg())
    }

    pub fn minkowski_sum(&self, other: &IntegralPolytope) -> Result<IntegralPolytope, LatticeError> {
        check_dims(self.dim, other.dim)?;
        if other.is_point() {
            return Ok(self.translate(&other.points[0]));
        }
        if self.is_point() {
            return Ok(other.translate(&self.points[0]));
        }
        let sums = self
            .points
            .iter()
            .flat_map(|p| other.points.iter().map(move |q| p.add(q)));
        IntegralPolytope::hull(sums)
    }

    pub fn mirror(&self) -> IntegralPolytope {
        IntegralPolytope::hull(self.points.iter().map(LatticePoint::neg)).expect("nonempty")
    }

    /// `k` times the polytope, i.e. the hull of `k * v` over its vertices.
    pub fn dilate(&self, k: &BigInt) -> IntegralPolytope {
        assert!(!k.is_negative(), "dilation factor must be nonnegative");
        if k.is_zero() {
            return Self::origin(self.dim);
        }
        IntegralPolytope {
            dim: self.dim,
            points: self.points.iter().map(|p| p.scale(k)).collect(),
        }
    }

    /// Maximum of `phi` over the polytope.
    pub fn support(&self, phi: &Direction) -> Result<BigInt, LatticeError> {
        check_dims(self.dim, phi.dim())?;
        Ok(self
            .points
            .iter()
            .map(|p| phi.eval(p))
            .max()
            .expect("nonempty"))
    }

    /// `max phi - min phi` over the polytope.
    pub fn thickness(&self, phi: &Direction) -> Result<BigInt, LatticeError> {
        Ok(self.support(phi)? + self.support(&phi.neg())?)
    }

    /// Vertices of the face on which `phi` is minimal.
    pub fn min_face(&self, phi: &Direction) -> Result<Vec<LatticePoint>, LatticeError> {
        check_dims(self.dim, phi.dim())?;
        let values: Vec<BigInt> = self.points.iter().map(|p| phi.eval(p)).collect();
        let min = values.iter().min().expect("nonempty");
        Ok(self
            .points
            .iter()
            .zip(&values)
            .filter(|(_, v)| *v == min)
            .map(|(p, _)| p.clone())
            .collect())
    }

    /// Vertices on which `phi` is maximal.
    pub fn max_face(&self, phi: &Direction) -> Result<Vec<LatticePoint>, LatticeError> {
        self.min_face(&phi.neg())
    }

    /// Whether some lattice vector carries `self` onto `other`.
    pub fn translation_eq(&self, other: &IntegralPolytope) -> bool {
        if self.dim != other.dim || self.points.len() != other.points.len() {
            return false;
        }
        let shift = other.points[0].sub(&self.points[0]);
        self.points
            .iter()
            .zip(&other.points)
            .all(|(p, q)| &p.add(&shift) == q)
    }

    /// Exact membership of a rational point.
    pub fn contains_point(&self, q: &[BigRational]) -> Result<bool, LatticeError> {
        check_dims(self.dim, q.len())?;
        let pts = &self.points;
        match self.dim {
            1 => {
                let lo = BigRational::from_integer(pts[0].0[0].clone());
                let hi = BigRational::from_integer(pts[pts.len() - 1].0[0].clone());
                Ok(lo <= q[0] && q[0] <= hi)
            }
            2 => Ok(contains2(pts, q)),
            _ => {
                let gens: Vec<Vec<BigInt>> = pts.iter().map(|p| p.0.clone()).collect();
                Ok(simplex::in_convex_hull(&gens, q))
            }
        }
    }

    pub fn contains_lattice_point(&self, p: &LatticePoint) -> Result<bool, LatticeError> {
        self.contains_point(&p.to_rational())
    }

    /// Image under an integer matrix with `dim` columns, given row by row.
    pub fn push(&self, matrix: &[Vec<BigInt>]) -> Result<IntegralPolytope, LatticeError> {
        if matrix.is_empty() {
            return Err(LatticeError::ZeroDimension);
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != self.dim) {
            return Err(LatticeError::ShapeMismatch {
                expected: self.dim,
                found: row.len(),
            });
        }
        IntegralPolytope::hull(self.points.iter().map(|p| {
            LatticePoint(
                matrix
                    .iter()
                    .map(|row| row.iter().zip(&p.0).map(|(a, b)| a * b).sum())
                    .collect(),
            )
        }))
    }

    /// The polytope `R` with `R + q = self`, if it exists (dimension <= 2).
    ///
    /// `R` is found as `{x : x + q ⊆ self}` cut out by the edge normals of
    /// both polytopes, then confirmed by summing back.
    pub fn erode(&self, q: &IntegralPolytope) -> Result<Option<IntegralPolytope>, LatticeError> {
        check_dims(self.dim, q.dim)?;
        if self.dim > 2 {
            return Err(LatticeError::UnsupportedDimension {
                op: "erosion",
                dim: self.dim,
                max: 2,
            });
        }
        if q.is_point() {
            return Ok(Some(self.translate(&q.points[0].neg())));
        }
        let candidate = if self.dim == 1 {
            let lo = &self.points[0].0[0] - &q.points[0].0[0];
            let hi = &self.points[self.points.len() - 1].0[0] - &q.points[q.points.len() - 1].0[0];
            if hi < lo {
                return Ok(None);
            }
            IntegralPolytope::hull([LatticePoint(vec![lo]), LatticePoint(vec![hi])])?
        } else {
            match erode2(self, q) {
                Some(r) => r,
                None => return Ok(None),
            }
        };
        if &candidate.minkowski_sum(q)? == self {
            Ok(Some(candidate))
        } else {
            Ok(None)
        }
    }

    /// Outward primitive normals of the edges (dimension 2), in
    /// counter-clockwise order. Lower-dimensional polygons report the normals
    /// needed to cut them out: a segment gets its two side normals and its two
    /// end normals, a point gets the four coordinate directions.
    fn bounding_normals2(&self) -> Vec<Direction> {
        let pts = &self.points;
        match pts.len() {
            1 => vec![
                Direction::from_i64(&[1, 0]).unwrap(),
                Direction::from_i64(&[0, 1]).unwrap(),
                Direction::from_i64(&[-1, 0]).unwrap(),
                Direction::from_i64(&[0, -1]).unwrap(),
            ],
            2 => {
                let d = pts[1].sub(&pts[0]);
                let perp = primitive_vec(vec![-d.0[1].clone(), d.0[0].clone()]);
                let along = primitive_vec(d.0.clone());
                vec![along.clone(), perp.clone(), along.neg(), perp.neg()]
            }
            n => (0..n)
                .map(|i| {
                    let e = pts[(i + 1) % n].sub(&pts[i]);
                    primitive_vec(vec![e.0[1].clone(), -e.0[0].clone()])
                })
                .collect(),
        }
    }

    /// For every vertex, the open cone of directions maximised uniquely there.
    pub fn normal_arcs(&self) -> Result<Vec<(LatticePoint, NormalCone)>, LatticeError> {
        if self.dim != 2 {
            return Err(LatticeError::UnsupportedDimension {
                op: "normal fan",
                dim: self.dim,
                max: 2,
            });
        }
        let pts = &self.points;
        let n = pts.len();
        match n {
            1 => Ok(vec![(pts[0].clone(), NormalCone::FullCircle)]),
            2 => {
                let d = pts[1].sub(&pts[0]);
                // rot90(d) turned a further quarter counter-clockwise is -d.
                let rot = primitive_vec(vec![-d.0[1].clone(), d.0[0].clone()]);
                Ok(vec![
                    (
                        pts[0].clone(),
                        NormalCone::Arc {
                            from: rot.clone(),
                            to: rot.neg(),
                        },
                    ),
                    (
                        pts[1].clone(),
                        NormalCone::Arc {
                            from: rot.neg(),
                            to: rot,
                        },
                    ),
                ])
            }
            _ => {
                let normals = self.bounding_normals2();
                Ok((0..n)
                    .map(|i| {
                        let incoming = normals[(i + n - 1) % n].clone();
                        let outgoing = normals[i].clone();
                        (
                            pts[i].clone(),
                            NormalCone::Arc {
                                from: incoming,
                                to: outgoing,
                            },
                        )
                    })
                    .collect())
            }
        }
    }

    /// Index of the vertex that uniquely maximises `phi`, if there is one.
    pub fn unique_maximizer(&self, phi: &Direction) -> Result<Option<usize>, LatticeError> {
        check_dims(self.dim, phi.dim())?;
        let values: Vec<BigInt> = self.points.iter().map(|p| phi.eval(p)).collect();
        let max = values.iter().max().expect("nonempty");
        let mut hits = values.iter().enumerate().filter(|(_, v)| *v == max);
        let first = hits.next().map(|(i, _)| i);
        Ok(if hits.next().is_some() { None } else { first })
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }
}

impl fmt::Display for IntegralPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Andrew's monotone chain on sorted, deduplicated points. Collinear points
/// are dropped; the result runs counter-clockwise from the smallest point.
fn hull2(pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.truncate(1);
    }
    lower
}

fn prune_interior(mut pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
    let mut i = 0;
    while i < pts.len() && pts.len() > 1 {
        let others: Vec<Vec<BigInt>> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.0.clone())
            .collect();
        if simplex::in_convex_hull(&others, &pts[i].to_rational()) {
            pts.remove(i);
        } else {
            i += 1;
        }
    }
    pts
}

fn contains2(pts: &[LatticePoint], q: &[BigRational]) -> bool {
    let rat = |p: &LatticePoint| p.to_rational();
    let cross = |a: &[BigRational], b: &[BigRational], c: &[BigRational]| {
        (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
    };
    match pts.len() {
        1 => rat(&pts[0]).as_slice() == q,
        2 => {
            let a = rat(&pts[0]);
            let b = rat(&pts[1]);
            if !cross(&a, &b, q).is_zero() {
                return false;
            }
            let within = |i: usize| {
                let (lo, hi) = match a[i].cmp(&b[i]) {
                    Ordering::Greater => (&b[i], &a[i]),
                    _ => (&a[i], &b[i]),
                };
                lo <= &q[i] && &q[i] <= hi
            };
            within(0) && within(1)
        }
        n => (0..n).all(|i| {
            let a = rat(&pts[i]);
            let b = rat(&pts[(i + 1) % n]);
            !cross(&a, &b, q).is_negative()
        }),
    }
}

/// Candidate Minkowski difference in the plane: intersect the half-planes
/// `<u, x> <= h_P(u) - h_Q(u)` and return the hull of the vertices if they
/// are all integral.
fn erode2(p: &IntegralPolytope, q: &IntegralPolytope) -> Option<IntegralPolytope> {
    let mut normals = p.bounding_normals2();
    normals.extend(q.bounding_normals2());
    normals.sort();
    normals.dedup();
    let constraints: Vec<(Direction, BigInt)> = normals
        .into_iter()
        .map(|u| {
            let bound = p.support(&u).unwrap() - q.support(&u).unwrap();
            (u, bound)
        })
        .collect();
    let mut vertices = Vec::new();
    for (i, (u1, c1)) in constraints.iter().enumerate() {
        for (u2, c2) in &constraints[i + 1..] {
            let det = cross2(&u1.0, &u2.0);
            if det.is_zero() {
                continue;
            }
            // Cramer's rule for u1.x = c1, u2.x = c2.
            let x_num = c1 * &u2.0[1] - c2 * &u1.0[1];
            let y_num = &u1.0[0] * c2 - &u2.0[0] * c1;
            let x = BigRational::new(x_num, det.clone());
            let y = BigRational::new(y_num, det);
            let feasible = constraints.iter().all(|(u, c)| {
                let val = BigRational::from_integer(u.0[0].clone()) * &x
                    + BigRational::from_integer(u.0[1].clone()) * &y;
                val <= BigRational::from_integer(c.clone())
            });
            if !feasible {
                continue;
            }
            if !x.is_integer() || !y.is_integer() {
                return None;
            }
            vertices.push(LatticePoint(vec![x.to_integer(), y.to_integer()]));
        }
    }
    if vertices.is_empty() {
        return None;
    }
    IntegralPolytope::hull(vertices).ok()
}
