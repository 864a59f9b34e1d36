//! Marked polytopes and the polytope invariant of a nice presentation.
//!
//! Two constructions are implemented. The lattice walk reads the relator as
//! a path in `Z^2` (`x` is `(1,0)`, `y` is `(0,1)`), takes the hull of the
//! visited points and erodes it by the unit square. The Fox route takes the
//! marked Newton polytope of `dr/dx` and removes the marked segment of
//! `y - 1` (or `dr/dy` and `x - 1`). The walk is authoritative for the
//! underlying polytope; the Fox route supplies the marking, and any
//! disagreement between the two is reported rather than resolved.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::grothendieck::{GrothElement, GrothError};
use crate::lattice::{IntegralPolytope, LatticeError, LatticePoint};
use crate::words::{
    abelianize_fibers, fox_derivative, newton_polytope, FreeWordSum, Presentation, WordError, X,
    Y,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkedError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Groth(#[from] GrothError),
    #[error("marked index {index} out of range for {vertices} vertices")]
    BadIndex { index: usize, vertices: usize },
    #[error("marked polytopes live in dimension <= 2, got {0}")]
    Dimension(usize),
    #[error("presentation is not nice: {}", .reasons.join(", "))]
    NotNice { reasons: Vec<String> },
    #[error("presentation has b1 = {found}, this operation needs b1 = {expected}")]
    WrongB1 { expected: u8, found: u8 },
    #[error("the subtracted polytope must be a segment with both endpoints marked")]
    NotMarkedSegment,
    #[error("Minkowski difference does not exist: {polytope} is not a sum with {summand}")]
    ErosionFailed { polytope: String, summand: String },
    #[error("inconsistent marking at vertex {vertex}: its images in the sum disagree")]
    InconsistentMarking { vertex: LatticePoint },
    #[error("both routes are degenerate: neither generator survives in H")]
    DegenerateRoutes,
    #[error("route {route} disagrees with the lattice walk: walk {walk}, Fox route {fox}")]
    Discrepancy {
        route: Route,
        walk: String,
        fox: String,
    },
}

/// Which Fox derivative drives the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// `dr/dx` divided by `y - 1`.
    X,
    /// `dr/dy` divided by `x - 1`.
    Y,
}

impl Route {
    fn generators(self) -> (u8, u8) {
        match self {
            Route::X => (X, Y),
            Route::Y => (Y, X),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::X => "x",
            Route::Y => "y",
        })
    }
}

/// A polytope of dimension at most two with some of its vertices marked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPolytope {
    polytope: IntegralPolytope,
    marked: BTreeSet<usize>,
}

impl MarkedPolytope {
    pub fn new(
        polytope: IntegralPolytope,
        marked: impl IntoIterator<Item = usize>,
    ) -> Result<Self, MarkedError> {
        if polytope.dim() > 2 {
            return Err(MarkedError::Dimension(polytope.dim()));
        }
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if let Some(&index) = marked.iter().find(|&&i| i >= polytope.vertex_count()) {
            return Err(MarkedError::BadIndex {
                index,
                vertices: polytope.vertex_count(),
            });
        }
        Ok(MarkedPolytope { polytope, marked })
    }

    pub fn unmarked(polytope: IntegralPolytope) -> Result<Self, MarkedError> {
        MarkedPolytope::new(polytope, [])
    }

    pub fn fully_marked(polytope: IntegralPolytope) -> Result<Self, MarkedError> {
        let n = polytope.vertex_count();
        MarkedPolytope::new(polytope, 0..n)
    }

    /// Marks the vertices whose points are listed; other points are ignored.
    pub fn with_marked_points(
        polytope: IntegralPolytope,
        points: &[LatticePoint],
    ) -> Result<Self, MarkedError> {
        let idx: Vec<usize> = points.iter().filter_map(|p| polytope.index_of(p)).collect();
        MarkedPolytope::new(polytope, idx)
    }

    pub fn polytope(&self) -> &IntegralPolytope {
        &self.polytope
    }

    pub fn marked_indices(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn marked_points(&self) -> Vec<LatticePoint> {
        self.marked
            .iter()
            .map(|&i| self.polytope.points()[i].clone())
            .collect()
    }

    pub fn is_marked(&self, index: usize) -> bool {
        self.marked.contains(&index)
    }

    pub fn is_marked_point(&self, p: &LatticePoint) -> bool {
        self.polytope
            .index_of(p)
            .is_some_and(|i| self.marked.contains(&i))
    }

    pub fn into_unmarked(self) -> IntegralPolytope {
        self.polytope
    }

    pub fn translate(&self, v: &LatticePoint) -> MarkedPolytope {
        MarkedPolytope {
            polytope: self.polytope.translate(v),
            marked: self.marked.clone(),
        }
    }

    /// Translate with the lexicographically smallest vertex at the origin.
    pub fn canonical(&self) -> MarkedPolytope {
        MarkedPolytope {
            polytope: self.polytope.canonical(),
            marked: self.marked.clone(),
        }
    }

    pub fn translation_eq(&self, other: &MarkedPolytope) -> bool {
        // Translation preserves vertex order, so marks compare by index.
        self.polytope.translation_eq(&other.polytope) && self.marked == other.marked
    }

    /// Marked Minkowski sum: a vertex of the sum is marked iff both of its
    /// (unique) summands are marked.
    pub fn marked_sum(&self, other: &MarkedPolytope) -> Result<MarkedPolytope, MarkedError> {
        let sum = self.polytope.minkowski_sum(&other.polytope)?;
        let mut marked = Vec::new();
        for (k, w) in sum.points().iter().enumerate() {
            let (i, j) = decompose(w, &self.polytope, &other.polytope);
            if self.is_marked(i) && other.is_marked(j) {
                marked.push(k);
            }
        }
        MarkedPolytope::new(sum, marked)
    }

    /// The unique `M` with `M + seg = self`, for a fully marked segment
    /// `seg`. Each vertex of `M` takes the mark of its images in `self`.
    pub fn deconvolve_segment(&self, seg: &MarkedPolytope) -> Result<MarkedPolytope, MarkedError> {
        if seg.polytope.vertex_count() != 2 || seg.marked.len() != 2 {
            return Err(MarkedError::NotMarkedSegment);
        }
        let rest = self
            .polytope
            .erode(&seg.polytope)?
            .ok_or_else(|| MarkedError::ErosionFailed {
                polytope: self.polytope.to_string(),
                summand: seg.polytope.to_string(),
            })?;
        let mut witness: BTreeMap<usize, bool> = BTreeMap::new();
        for (k, w) in self.polytope.points().iter().enumerate() {
            let (i, _) = decompose(w, &rest, &seg.polytope);
            let mark = self.is_marked(k);
            match witness.get(&i) {
                Some(&m) if m != mark => {
                    return Err(MarkedError::InconsistentMarking {
                        vertex: rest.points()[i].clone(),
                    })
                }
                _ => {
                    witness.insert(i, mark);
                }
            }
        }
        let marked: Vec<usize> = witness
            .into_iter()
            .filter_map(|(i, m)| m.then_some(i))
            .collect();
        MarkedPolytope::new(rest, marked)
    }

    /// Marked Newton polytope: hull of the nonvanishing fibers, with a vertex
    /// marked iff its fiber is a single word with coefficient `+1` or `-1`.
    pub fn from_fibers(fibers: &BTreeMap<LatticePoint, FreeWordSum>) -> Result<Self, MarkedError> {
        let support = fibers
            .iter()
            .filter(|(_, f)| !f.is_zero())
            .map(|(p, _)| p.clone());
        let polytope = IntegralPolytope::hull(support).map_err(|e| match e {
            LatticeError::EmptyInput => MarkedError::Word(WordError::ZeroElement),
            other => other.into(),
        })?;
        let marked: Vec<usize> = polytope
            .points()
            .iter()
            .enumerate()
            .filter(|(_, p)| fibers.get(*p).is_some_and(FreeWordSum::is_signed_word))
            .map(|(i, _)| i)
            .collect();
        MarkedPolytope::new(polytope, marked)
    }
}

impl fmt::Display for MarkedPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.polytope.points().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}{}", if self.is_marked(i) { "*" } else { "" })?;
        }
        write!(f, "}}")
    }
}

/// The unique pair of vertex indices `(i, j)` with `a[i] + b[j] = w`, for a
/// vertex `w` of `a + b`.
fn decompose(w: &LatticePoint, a: &IntegralPolytope, b: &IntegralPolytope) -> (usize, usize) {
    for (i, p) in a.points().iter().enumerate() {
        let rest = w.sub(p);
        if let Some(j) = b.index_of(&rest) {
            return (i, j);
        }
    }
    unreachable!("every vertex of a Minkowski sum is a sum of vertices")
}

/// Lattice points visited while reading the relator, origin included.
pub fn walk_trace(p: &Presentation) -> Vec<LatticePoint> {
    let mut pos = [0i64; 2];
    let mut trace = vec![LatticePoint::from(pos)];
    for l in p.relator().letters() {
        pos[l.generator as usize] += l.sign();
        trace.push(LatticePoint::from(pos));
    }
    trace
}

fn require_nice(p: &Presentation) -> Result<(), MarkedError> {
    if p.is_nice() {
        return Ok(());
    }
    let mut reasons = Vec::new();
    if !p.is_reduced() {
        reasons.push("relator is not freely reduced".to_string());
    } else if !p.is_cyclically_reduced() {
        reasons.push("relator is not cyclically reduced".to_string());
    }
    if p.b1() != 2 {
        let (ex, ey) = p.exponent_sums();
        reasons.push(format!("b1 = 1 (exponent sums {ex}, {ey})"));
    }
    Err(MarkedError::NotNice { reasons })
}

/// The polytope of a nice presentation: the walk hull eroded by the unit
/// square.
pub fn walk_polytope(p: &Presentation) -> Result<IntegralPolytope, MarkedError> {
    require_nice(p)?;
    let hull = IntegralPolytope::hull(walk_trace(p))?;
    let square = IntegralPolytope::unit_cube(2);
    hull.erode(&square)?
        .ok_or_else(|| MarkedError::ErosionFailed {
            polytope: hull.to_string(),
            summand: square.to_string(),
        })
}

/// The marked polytope obtained from one Fox derivative, without comparing
/// against the walk.
pub fn fox_marked(p: &Presentation, route: Route) -> Result<MarkedPolytope, MarkedError> {
    require_nice(p)?;
    let (deriv, other) = route.generators();
    let map = p.abelianization();
    let numerator = fox_derivative(p.relator(), deriv);
    let big = MarkedPolytope::from_fibers(&abelianize_fibers(&numerator, map))?;
    let seg = MarkedPolytope::from_fibers(&abelianize_fibers(
        &FreeWordSum::generator_minus_one(other),
        map,
    ))?;
    big.deconvolve_segment(&seg)
}

/// The marked polytope of a nice presentation via the given route, checked
/// against the walk polytope.
pub fn marked_invariant(p: &Presentation, route: Route) -> Result<MarkedPolytope, MarkedError> {
    let walk = walk_polytope(p)?;
    let fox = fox_marked(p, route)?;
    if !fox.polytope().translation_eq(&walk) {
        return Err(MarkedError::Discrepancy {
            route,
            walk: walk.canonical().to_string(),
            fox: fox.canonical().to_string(),
        });
    }
    Ok(fox)
}

/// The invariant of a presentation with `b1 = 1`, as an element of the
/// Grothendieck group of the line.
#[derive(Debug, Clone)]
pub struct IntervalInvariant {
    pub element: GrothElement,
    pub route: Route,
    /// The interval representing the element, when it is a polytope.
    pub representative: Option<IntegralPolytope>,
}

/// `P(dr/dg) - P(h - 1)` in `H = Z`, where the route is chosen so that the
/// subtracted generator `h` has nonzero image.
pub fn interval_invariant(p: &Presentation) -> Result<IntervalInvariant, MarkedError> {
    if p.b1() != 1 {
        return Err(MarkedError::WrongB1 {
            expected: 1,
            found: p.b1(),
        });
    }
    if !p.is_reduced() || !p.is_cyclically_reduced() {
        require_nice(p)?;
    }
    let map = p.abelianization();
    let route = if !map.generator_image(Y).is_origin() {
        Route::X
    } else if !map.generator_image(X).is_origin() {
        Route::Y
    } else {
        return Err(MarkedError::DegenerateRoutes);
    };
    let (deriv, other) = route.generators();
    let numerator = newton_polytope(&fox_derivative(p.relator(), deriv), map)?;
    let denominator = newton_polytope(&FreeWordSum::generator_minus_one(other), map)?;
    let element = GrothElement::new(numerator, denominator)?;
    let representative = element.as_polytope()?;
    Ok(IntervalInvariant {
        element,
        route,
        representative,
    })
}

/// The invariant of a presentation as a Grothendieck element: the walk
/// polytope when `b1 = 2`, the interval invariant when `b1 = 1`.
pub fn polytope_invariant(p: &Presentation) -> Result<GrothElement, MarkedError> {
    match p.b1() {
        2 => Ok(GrothElement::from_polytope(walk_polytope(p)?)),
        _ => Ok(interval_invariant(p)?.element),
    }
}

/// Minimal enumeration of marked polytopes with vertices in `{0..side}^2`,
/// deduplicated, ordered by vertex count then lexicographically.
pub fn enumerate_marked(side: i64) -> Vec<MarkedPolytope> {
    let grid: Vec<LatticePoint> = (0..=side)
        .flat_map(|x| (0..=side).map(move |y| LatticePoint::from([x, y])))
        .collect();
    let mut polys: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    for mask in 1u32..(1 << grid.len()) {
        let pts = grid
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone());
        let hull = IntegralPolytope::hull(pts).expect("nonempty");
        polys.insert(hull.points().to_vec());
    }
    let mut polys: Vec<IntegralPolytope> = polys
        .into_iter()
        .map(|pts| IntegralPolytope::hull(pts).expect("nonempty"))
        .collect();
    polys.sort_by(|a, b| {
        a.vertex_count()
            .cmp(&b.vertex_count())
            .then_with(|| a.points().cmp(b.points()))
    });
    let mut out = Vec::new();
    for poly in polys {
        let n = poly.vertex_count();
        for marks in 0u32..(1 << n) {
            let idx = (0..n).filter(|i| marks & (1 << i) != 0);
            out.push(MarkedPolytope::new(poly.clone(), idx).expect("valid indices"));
        }
    }
    out
}

/// Searches for `M, N != N'` with `M + N = M + N'` among marked polytopes
/// with vertices in `{0,1,2}^2`, skipping witnesses where `M` carries no
/// marks. Returns the first witness in enumeration order.
pub fn find_non_cancellation_witness() -> Option<(MarkedPolytope, MarkedPolytope, MarkedPolytope)>
{
    let all = enumerate_marked(2);
    for m in all.iter().filter(|m| !m.marked_indices().is_empty()) {
        let mut seen: BTreeMap<(Vec<LatticePoint>, Vec<usize>), &MarkedPolytope> = BTreeMap::new();
        for n in &all {
            let s = m.marked_sum(n).expect("planar");
            let key = (
                s.polytope().points().to_vec(),
                s.marked_indices().iter().copied().collect(),
            );
            if let Some(prev) = seen.get(&key) {
                return Some((m.clone(), (*prev).clone(), n.clone()));
            }
            seen.insert(key, n);
        }
    }
    None
}
