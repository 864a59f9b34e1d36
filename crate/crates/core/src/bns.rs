//! BNS-invariant queries, thickness and splitting complexity.
//!
//! For a nice presentation a nonzero character lies in the BNS invariant iff
//! its maximum over the marked polytope is attained at a single vertex and
//! that vertex is marked. The invariant is then the union of the open normal
//! cones of the marked vertices. Edge normals are never members, since they
//! are maximised on a whole edge.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::grothendieck::GrothElement;
use crate::lattice::{Direction, LatticeError, NormalCone};
use crate::marked::{marked_invariant, polytope_invariant, MarkedError, MarkedPolytope, Route};
use crate::words::{Presentation, X, Y};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BnsError {
    #[error(transparent)]
    Marked(#[from] MarkedError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("BNS queries are unsupported for b1 = 1")]
    UnsupportedB1,
    #[error("character has {found} entries, H has rank {expected}")]
    CharacterRank { expected: usize, found: usize },
    #[error("character {phi} does not induce an epimorphism onto Z")]
    NotEpimorphic { phi: String },
    #[error("thickness {thickness} is negative; the splitting-complexity identity does not apply")]
    NegativeThickness { thickness: BigInt },
}

/// The BNS invariant as a subset of the circle of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BnsReport {
    FullCircle,
    Empty,
    /// Pairwise disjoint open arcs, each swept counter-clockwise from the
    /// first boundary direction to the second.
    Arcs(Vec<(Direction, Direction)>),
}

impl BnsReport {
    pub fn kind(&self) -> &'static str {
        match self {
            BnsReport::FullCircle => "full_circle",
            BnsReport::Empty => "empty",
            BnsReport::Arcs(_) => "arcs",
        }
    }

    pub fn arcs(&self) -> &[(Direction, Direction)] {
        match self {
            BnsReport::Arcs(a) => a,
            _ => &[],
        }
    }

    /// Whether the ray of `phi` lies in the reported set.
    pub fn contains(&self, phi: &Direction) -> bool {
        match self {
            BnsReport::FullCircle => true,
            BnsReport::Empty => false,
            BnsReport::Arcs(arcs) => arcs.iter().any(|(from, to)| {
                NormalCone::Arc {
                    from: from.clone(),
                    to: to.clone(),
                }
                .contains(phi)
            }),
        }
    }

    /// Union of the normal cones of the marked vertices.
    pub fn from_marked(m: &MarkedPolytope) -> Result<BnsReport, BnsError> {
        let cones = m.polytope().normal_arcs()?;
        let mut arcs = Vec::new();
        for (i, (_, cone)) in cones.into_iter().enumerate() {
            if !m.is_marked(i) {
                continue;
            }
            match cone {
                NormalCone::FullCircle => return Ok(BnsReport::FullCircle),
                NormalCone::Arc { from, to } => arcs.push((from, to)),
            }
        }
        Ok(if arcs.is_empty() {
            BnsReport::Empty
        } else {
            BnsReport::Arcs(arcs)
        })
    }
}

/// True iff the maximum of `phi` is attained at a unique vertex and that
/// vertex is marked.
pub fn pairs_maximally(m: &MarkedPolytope, phi: &Direction) -> Result<bool, BnsError> {
    Ok(m.polytope()
        .unique_maximizer(phi)?
        .is_some_and(|i| m.is_marked(i)))
}

fn require_b1_two(p: &Presentation) -> Result<(), BnsError> {
    if p.b1() == 2 {
        Ok(())
    } else {
        Err(BnsError::UnsupportedB1)
    }
}

fn check_rank(p: &Presentation, phi: &Direction) -> Result<(), BnsError> {
    let expected = p.abelianization().rank();
    if phi.dim() == expected {
        Ok(())
    } else {
        Err(BnsError::CharacterRank {
            expected,
            found: phi.dim(),
        })
    }
}

pub fn bns_member(p: &Presentation, phi: &Direction) -> Result<bool, BnsError> {
    require_b1_two(p)?;
    check_rank(p, phi)?;
    let m = marked_invariant(p, Route::X)?;
    pairs_maximally(&m, phi)
}

pub fn bns_arcs(p: &Presentation) -> Result<BnsReport, BnsError> {
    require_b1_two(p)?;
    let m = marked_invariant(p, Route::X)?;
    BnsReport::from_marked(&m)
}

/// Thickness of the polytope invariant along `phi`.
///
/// For `b1 = 2` this is the walk polytope, for `b1 = 1` the interval
/// invariant (which may be a negative interval, e.g. for `Z`).
pub fn thickness_of(p: &Presentation, phi: &Direction) -> Result<BigInt, BnsError> {
    check_rank(p, phi)?;
    let e = polytope_invariant(p)?;
    Ok(e.thickness(phi).map_err(MarkedError::from)?)
}

/// `thickness + 1`, for characters inducing an epimorphism onto `Z`.
pub fn splitting_complexity(p: &Presentation, phi: &Direction) -> Result<BigInt, BnsError> {
    check_rank(p, phi)?;
    let map = p.abelianization();
    let g = [X, Y]
        .iter()
        .map(|&gen| phi.eval(&map.generator_image(gen)))
        .fold(BigInt::zero(), |g, v| g.gcd(&v));
    if !g.is_one() {
        return Err(BnsError::NotEpimorphic {
            phi: phi.to_string(),
        });
    }
    let thickness = thickness_of(p, phi)?;
    if thickness < BigInt::zero() {
        return Err(BnsError::NegativeThickness { thickness });
    }
    Ok(thickness + 1)
}

/// Twice the polytope invariant, the Thurston polytope when the group is
/// the fundamental group of an admissible 3-manifold.
pub fn thurston_polytope(p: &Presentation) -> Result<GrothElement, BnsError> {
    Ok(polytope_invariant(p)?.scale(&BigInt::from(2)))
}
