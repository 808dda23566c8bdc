//! Metric quantities on the Cayley tree of `F_r`.
//!
//! Vertices are group elements, so a [`TreePoint`] is just a reduced word.
//! The tree is 0-hyperbolic, and every hyperbolic element `g = p·u·p⁻¹`
//! (`u` cyclically reduced) has an exact invariant line, its axis
//! `p·{…u⁻¹u⁻¹ · uu…}`. Cylinders of the general theory collapse to these axes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::moves::{enumerate_moves, BurnsideParams};
use crate::repetition::find_power_factorizations;
use crate::word::{FreeWord, Letter};

pub type TreePoint = FreeWord;

pub fn distance(g: &TreePoint, h: &TreePoint) -> Result<usize> {
    Ok(g.invert().multiply(h)?.len())
}

/// A Gromov product, stored doubled so that half-integers stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GromovProduct {
    pub doubled: i64,
}

impl GromovProduct {
    pub fn value(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl fmt::Display for GromovProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// `⟨x, y⟩_z = ½(d(x,z) + d(y,z) − d(x,y))`.
pub fn gromov_product(x: &TreePoint, y: &TreePoint, z: &TreePoint) -> Result<GromovProduct> {
    let xz = distance(x, z)? as i64;
    let yz = distance(y, z)? as i64;
    let xy = distance(x, y)? as i64;
    Ok(GromovProduct {
        doubled: xz + yz - xy,
    })
}

/// `inf d(g·x, x)`; on the tree this is the length of the cyclic core.
pub fn translation_length(g: &FreeWord) -> usize {
    g.cyclic_reduce().core.len()
}

/// `lim d(gᵏ·x, x)/k`, which coincides with the translation length on a tree.
pub fn stable_length(g: &FreeWord) -> usize {
    translation_length(g)
}

/// The invariant line of a hyperbolic element `owner = conjugator · core · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Axis {
    pub conjugator: FreeWord,
    pub core: FreeWord,
    pub owner: FreeWord,
}

pub fn axis(g: &FreeWord) -> Result<Axis> {
    if g.is_empty() {
        return Err(Error::IdentityAxis);
    }
    let d = g.cyclic_reduce();
    Ok(Axis {
        conjugator: d.conjugator,
        core: d.core,
        owner: g.clone(),
    })
}

impl Axis {
    pub fn rank(&self) -> u32 {
        self.owner.rank()
    }

    /// Letter `i` (0-based) of `core^∞` when `forward`, else of `(core⁻¹)^∞`.
    fn ray_letter(&self, forward: bool, i: usize) -> Letter {
        let u = self.core.letters();
        let k = u.len();
        if forward {
            u[i % k]
        } else {
            u[k - 1 - i % k].inverse()
        }
    }

    /// Signed position along the axis of the projection of `x`, measured from
    /// the conjugator vertex in the direction of `core`.
    pub fn coordinate(&self, x: &TreePoint) -> Result<i64> {
        let local = self.conjugator.invert().multiply(x)?;
        let letters = local.letters();
        let forward = letters
            .iter()
            .enumerate()
            .take_while(|&(i, &l)| l == self.ray_letter(true, i))
            .count();
        if forward > 0 {
            return Ok(forward as i64);
        }
        let backward = letters
            .iter()
            .enumerate()
            .take_while(|&(i, &l)| l == self.ray_letter(false, i))
            .count();
        Ok(-(backward as i64))
    }

    /// The axis vertex at signed position `t`.
    pub fn point(&self, t: i64) -> TreePoint {
        let forward = t >= 0;
        let letters = (0..t.unsigned_abs() as usize).map(|i| self.ray_letter(forward, i));
        let local = FreeWord::reduce(letters, self.rank()).expect("axis letters are within rank");
        self.conjugator.multiply(&local).expect("same rank")
    }

    pub fn contains(&self, x: &TreePoint) -> Result<bool> {
        let t = self.coordinate(x)?;
        Ok(&self.point(t) == x)
    }
}

/// Length of the intersection of the geodesic `[x, y]` with the axis `a`.
///
/// In a tree the intersection is the segment between the projections of `x`
/// and `y` on the line (possibly a single point).
pub fn geodesic_axis_overlap(x: &TreePoint, y: &TreePoint, a: &Axis) -> Result<usize> {
    if x.rank() != a.rank() || y.rank() != a.rank() {
        return Err(Error::RankMismatch(x.rank(), a.rank()));
    }
    let tx = a.coordinate(x)?;
    let ty = a.coordinate(y)?;
    Ok(tx.abs_diff(ty) as usize)
}

/// Overlap of two axes: a finite length, or infinite when they coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Overlap {
    Finite(usize),
    Infinite,
}

/// Whether two hyperbolic elements have the same axis, i.e. equal primitive
/// roots up to inversion.
fn same_line(a1: &Axis, a2: &Axis) -> Result<bool> {
    let root = |a: &Axis| -> Result<FreeWord> {
        let (r, _) = a.core.primitive_root()?;
        r.conjugate_by(&a.conjugator)
    };
    let r1 = root(a1)?;
    let r2 = root(a2)?;
    Ok(r1 == r2 || r1 == r2.invert())
}

pub fn axis_axis_overlap(a1: &Axis, a2: &Axis) -> Result<Overlap> {
    if a1.rank() != a2.rank() {
        return Err(Error::RankMismatch(a1.rank(), a2.rank()));
    }
    if same_line(a1, a2)? {
        return Ok(Overlap::Infinite);
    }
    // Distinct axes share less than |u1| + |u2| letters, and any common segment
    // contains the projection of a1's base vertex onto a2. Clip a2 to a window
    // around that projection and measure it against a1.
    let centre = a2.coordinate(&a1.conjugator)?;
    let reach = (a1.core.len() + a2.core.len() + 1) as i64;
    let lo = a2.point(centre - reach);
    let hi = a2.point(centre + reach);
    Ok(Overlap::Finite(geodesic_axis_overlap(&lo, &hi, a1)?))
}

/// The geometric move condition: `[1, y]` runs along the axis of `v` for at
/// least `m · ℓ(v)` and `m ≥ n/2 − ξ`.
pub fn geometric_move_condition(
    y: &TreePoint,
    v: &FreeWord,
    m: i64,
    params: &BurnsideParams,
) -> Result<bool> {
    let a = axis(v)?;
    if !params.admits_geometric(m) || m < 0 {
        return Ok(false);
    }
    let overlap = geodesic_axis_overlap(&FreeWord::identity(y.rank()), y, &a)?;
    Ok(overlap as i64 >= m * translation_length(v) as i64)
}

/// Conjugated bases `v = p·u·p⁻¹`, over every placement `p·u` reported by the
/// repetition scanner, for which the geometric move condition holds at the
/// smallest admissible integer exponent.
pub fn geometric_move_bases(w: &FreeWord, params: &BurnsideParams) -> Result<BTreeSet<FreeWord>> {
    let m = (1..)
        .find(|&m| params.admits_geometric(m))
        .expect("some exponent clears any finite threshold");
    let mut out = BTreeSet::new();
    for f in find_power_factorizations(w, 1) {
        let v = f.conjugated_base();
        if geometric_move_condition(w, &v, m, params)? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Conjugated bases of the moves [`enumerate_moves`] offers on `w`.
pub fn combinatorial_move_bases(w: &FreeWord, params: &BurnsideParams) -> BTreeSet<FreeWord> {
    enumerate_moves(w, params)
        .iter()
        .map(|mv| mv.factorization.conjugated_base())
        .collect()
}
