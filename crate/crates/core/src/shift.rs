//! The dominance order on rainbow faces and color-shifted complexes.
//!
//! `F ⊑ G` when every color of `F` is a color of `G` and, color by color,
//! `F`'s index is at most `G`'s. A complex is color-shifted exactly when its
//! face set is a down-set for `⊑`: closure under subsets comes from the
//! complex axiom, closure under lowering indices is the shifting condition.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::complex::ColoredComplex;
use crate::face::{ColorSet, Face, Vertex};
use crate::Error;

/// `lower ⊑ upper`.
pub fn dominance_le(lower: &Face, upper: &Face) -> bool {
    lower.vertices().iter().all(|v| upper.index_of(v.color).is_some_and(|i| v.index <= i))
}

/// A comparable pair `lower ⊑ upper`. Returned by [`shift_violation`] with
/// `upper` present in the complex and `lower` missing from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominancePair {
    pub lower: Face,
    pub upper: Face,
}

impl DominancePair {
    pub fn new(lower: Face, upper: Face) -> Option<Self> {
        dominance_le(&lower, &upper).then_some(DominancePair { lower, upper })
    }
}

impl fmt::Display for DominancePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "missing {} ⊑ {}", self.lower, self.upper)
    }
}

/// All faces `G ⊑ face`, in canonical order.
pub fn downset_faces(face: &Face) -> Vec<Face> {
    let colors = face.colors();
    let tops: Vec<u32> = face.indices().collect();
    let mut out = Vec::new();
    for sub in colors.subsets() {
        let bounds: Vec<u32> = colors.iter().zip(&tops).filter(|(c, _)| sub.contains(*c)).map(|(_, &t)| t).collect();
        for_each_index_vector(&bounds, |idx| out.push(Face::from_parts(sub, idx)));
    }
    out.sort();
    out
}

/// Calls `f` on every vector in `[1, b_0] × ... × [1, b_{k-1}]` in
/// lexicographic order. An empty bound list yields the empty vector once.
pub(crate) fn for_each_index_vector(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    if bounds.contains(&0) {
        return;
    }
    let mut idx = vec![1u32; bounds.len()];
    loop {
        f(&idx);
        let mut pos = bounds.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < bounds[pos] {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 1;
        }
    }
}

fn shift_violation_in(faces: &BTreeSet<Face>) -> Option<DominancePair> {
    let upper = faces.iter().find(|g| g.lower_covers().any(|h| !faces.contains(&h)))?;
    // Canonical order extends ⊑, so the first missing face is ⊑-minimal among
    // the missing ones.
    let lower = downset_faces(upper).into_iter().find(|h| !faces.contains(h))?;
    Some(DominancePair { lower, upper: upper.clone() })
}

/// The witness that `c` is not color-shifted: the first face in canonical
/// order with a missing predecessor, paired with its canonically first missing
/// predecessor. `None` when `c` is color-shifted.
pub fn shift_violation(c: &ColoredComplex) -> Option<DominancePair> {
    shift_violation_in(c.faces())
}

pub fn is_color_shifted(c: &ColoredComplex) -> bool {
    shift_violation(c).is_none()
}

fn require_shifted(c: &ColoredComplex) -> Result<(), Error> {
    match shift_violation(c) {
        Some(w) => Err(Error::NotColorShifted(w)),
        None => Ok(()),
    }
}

/// Order for shift-maximal faces: color list lexicographically, then index
/// vector lexicographically.
pub fn shift_maximal_order(a: &Face, b: &Face) -> Ordering {
    a.colors().lex_cmp(b.colors()).then_with(|| a.indices().cmp(b.indices()))
}

/// Upper covers of `face` that a down-set could contain: add `v_1^c` for an
/// unused color `c ≤ num_colors`, or raise one index by one.
fn upper_covers(face: &Face, num_colors: usize) -> impl Iterator<Item = Face> + '_ {
    let colors = face.colors();
    let adds = (1..=num_colors as u32)
        .filter(move |&c| !colors.contains(c))
        .map(move |c| face.with(Vertex { color: c, index: 1 }));
    let raises = face.vertices().iter().map(move |v| face.with(Vertex { color: v.color, index: v.index + 1 }));
    adds.chain(raises)
}

/// The ⊑-maximal faces of a color-shifted complex, sorted by
/// [`shift_maximal_order`].
///
/// These are exactly the faces whose removal leaves a color-shifted complex.
/// For `{∅}` the answer is `[∅]`; the complex with no faces has none.
pub fn shift_maximal_faces(c: &ColoredComplex) -> Result<Vec<Face>, Error> {
    require_shifted(c)?;
    let mut out: Vec<Face> = c
        .faces()
        .iter()
        .filter(|f| upper_covers(f, c.num_colors()).all(|g| !c.contains(&g)))
        .cloned()
        .collect();
    out.sort_by(shift_maximal_order);
    Ok(out)
}

/// All faces `G ⊑ face` as a complex over `c`'s colors.
///
/// When `c` is color-shifted the result is a subcomplex of `c` whose only
/// shift-maximal face is `face`.
pub fn principal_downset(c: &ColoredComplex, face: &Face) -> Result<ColoredComplex, Error> {
    if !c.contains(face) {
        return Err(Error::FaceNotInComplex(face.clone()));
    }
    Ok(ColoredComplex::from_valid_faces(c.num_colors(), downset_faces(face).into_iter().collect()))
}

/// The smallest color-shifted complex containing `generators`: the union of
/// their principal down-sets. No generators gives the complex with no faces.
pub fn shift_closure<I: IntoIterator<Item = Face>>(num_colors: usize, generators: I) -> Result<ColoredComplex, Error> {
    let mut faces = BTreeSet::new();
    let range = ColorSet::full(num_colors);
    for g in generators {
        if let Some(c) = g.colors().iter().find(|&c| !range.contains(c)) {
            return Err(Error::ColorOutOfRange { color: c, num_colors });
        }
        if !faces.contains(&g) {
            faces.extend(downset_faces(&g));
        }
    }
    ColoredComplex::void(num_colors)?;
    Ok(ColoredComplex::from_valid_faces(num_colors, faces))
}
