use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::face::{ColorSet, Face, Vertex};
use crate::{Error, MAX_COLORS};

/// The first invariant a face set breaks, in check order: colors in range,
/// closure under subsets, contiguous vertex indices. A missing empty face
/// shows up as a closure gap below some vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ColorOutOfRange { face: Face, color: u32 },
    /// `face` is present but its subface `missing` is not.
    ClosureGap { face: Face, missing: Face },
    /// Color `color` has a vertex above `missing_index` but not `v_{missing_index}^{color}`.
    IndexGap { color: u32, missing_index: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorOutOfRange { face, color } => {
                write!(f, "face {face} uses color {color} outside the color range")
            }
            Violation::ClosureGap { face, missing } => {
                write!(f, "closure violation: {face} present but {missing} missing")
            }
            Violation::IndexGap { color, missing_index } => write!(
                f,
                "saturation violation at color {color}: vertex v_{missing_index}^{color} missing"
            ),
        }
    }
}

/// Checks every [`ColoredComplex`] invariant on a raw face set.
///
/// The empty family passes.
pub fn validate(num_colors: usize, faces: &BTreeSet<Face>) -> Result<(), Violation> {
    for face in faces {
        if let Some(v) = face.vertices().iter().find(|v| v.color as usize > num_colors) {
            return Err(Violation::ColorOutOfRange { face: face.clone(), color: v.color });
        }
    }
    for face in faces {
        let mut facets: Vec<Face> = face.facets().collect();
        facets.sort();
        if let Some(missing) = facets.into_iter().find(|g| !faces.contains(g)) {
            return Err(Violation::ClosureGap { face: face.clone(), missing });
        }
    }
    // Faces are sorted by cardinality first, so singletons come right after ∅,
    // grouped by color and ascending in index.
    let mut expected = [1u32; MAX_COLORS + 1];
    for face in faces.iter().skip(1).take_while(|f| f.len() == 1) {
        let v = face.vertices()[0];
        let slot = &mut expected[v.color as usize];
        if v.index != *slot {
            return Err(Violation::IndexGap { color: v.color, missing_index: *slot });
        }
        *slot += 1;
    }
    Ok(())
}

/// A colored simplicial complex: a downward-closed set of rainbow faces over
/// colors `1..=num_colors`, with the vertices of each color numbered
/// contiguously from 1.
///
/// Values are immutable once built. Equality is literal: same color count and
/// the same labeled faces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredComplex {
    num_colors: usize,
    faces: BTreeSet<Face>,
}

fn check_num_colors(num_colors: usize) -> Result<(), Error> {
    if num_colors > MAX_COLORS {
        Err(Error::TooManyColors { requested: num_colors, max: MAX_COLORS })
    } else {
        Ok(())
    }
}

impl ColoredComplex {
    /// The complex with no faces at all.
    pub fn void(num_colors: usize) -> Result<Self, Error> {
        check_num_colors(num_colors)?;
        Ok(ColoredComplex { num_colors, faces: BTreeSet::new() })
    }

    /// `{∅}`.
    pub fn empty_face(num_colors: usize) -> Result<Self, Error> {
        check_num_colors(num_colors)?;
        Ok(ColoredComplex { num_colors, faces: BTreeSet::from([Face::empty()]) })
    }

    /// Accepts a face set only if it already satisfies every invariant.
    pub fn from_faces<I: IntoIterator<Item = Face>>(num_colors: usize, faces: I) -> Result<Self, Error> {
        check_num_colors(num_colors)?;
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        validate(num_colors, &faces)?;
        Ok(ColoredComplex { num_colors, faces })
    }

    /// Downward closure of `generators`.
    ///
    /// Fails if a generator uses a color above `num_colors`, or if the closure
    /// leaves a gap in some color's vertex indices.
    pub fn from_generators<I: IntoIterator<Item = Face>>(num_colors: usize, generators: I) -> Result<Self, Error> {
        check_num_colors(num_colors)?;
        let mut faces = BTreeSet::new();
        for g in generators {
            if let Some(v) = g.vertices().iter().find(|v| v.color as usize > num_colors) {
                return Err(Error::ColorOutOfRange { color: v.color, num_colors });
            }
            if faces.contains(&g) {
                continue;
            }
            faces.extend(g.subfaces());
        }
        validate(num_colors, &faces)?;
        Ok(ColoredComplex { num_colors, faces })
    }

    pub(crate) fn from_valid_faces(num_colors: usize, faces: BTreeSet<Face>) -> Self {
        debug_assert_eq!(validate(num_colors, &faces), Ok(()));
        ColoredComplex { num_colors, faces }
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn into_faces(self) -> BTreeSet<Face> {
        self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// True for the complex with no faces (not for `{∅}`).
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        validate(self.num_colors, &self.faces)
    }

    /// Number of vertices of `color`.
    pub fn vertex_count(&self, color: u32) -> u32 {
        let mut count = 0;
        while self.faces.contains(&Face::from_parts(ColorSet::singleton(color), &[count + 1])) {
            count += 1;
        }
        count
    }

    /// Colors that appear in at least one face.
    pub fn used_colors(&self) -> ColorSet {
        self.faces.iter().fold(ColorSet::EMPTY, |s, f| s.union(f.colors()))
    }

    /// The same faces viewed over a larger color range.
    pub fn with_num_colors(&self, num_colors: usize) -> Result<Self, Error> {
        check_num_colors(num_colors)?;
        let used = self.used_colors().max_color() as usize;
        if num_colors < used {
            return Err(Error::ColorOutOfRange { color: used as u32, num_colors });
        }
        Ok(ColoredComplex { num_colors, faces: self.faces.clone() })
    }

    /// Faces whose color set lies in `colors`, recolored by the
    /// order-preserving bijection `colors -> 1..=|colors|`.
    pub fn color_selected(&self, colors: ColorSet) -> Result<Self, Error> {
        if let Some(c) = colors.iter().find(|&c| c as usize > self.num_colors) {
            return Err(Error::ColorOutOfRange { color: c, num_colors: self.num_colors });
        }
        let mut rename = [0u32; 33];
        for (i, c) in colors.iter().enumerate() {
            rename[c as usize] = i as u32 + 1;
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.colors().is_subset(colors))
            .map(|f| {
                let vertices = f.vertices().iter().map(|v| Vertex { color: rename[v.color as usize], index: v.index });
                Face::new(vertices).expect("renaming keeps colors distinct")
            })
            .collect();
        Ok(ColoredComplex::from_valid_faces(colors.len(), faces))
    }

    /// `self ∪ {F ∪ {apex} : F ∈ self}` over `max(num_colors, apex.color)` colors.
    pub fn cone(&self, apex: Vertex) -> Result<Self, Error> {
        let apex = Vertex::new(apex.color, apex.index)?;
        if apex.index != 1 {
            return Err(Error::ApexIndexNotOne(apex));
        }
        if self.used_colors().contains(apex.color) {
            return Err(Error::ApexColorInUse(apex));
        }
        let num_colors = self.num_colors.max(apex.color as usize);
        check_num_colors(num_colors)?;
        let mut faces = self.faces.clone();
        faces.extend(self.faces.iter().map(|f| f.with(apex)));
        Ok(ColoredComplex::from_valid_faces(num_colors, faces))
    }

    /// Set union, with vertices of equal `(color, index)` identified.
    pub fn union(&self, other: &ColoredComplex) -> Result<Self, Error> {
        let num_colors = self.num_colors.max(other.num_colors);
        let faces: BTreeSet<Face> = self.faces.union(&other.faces).cloned().collect();
        validate(num_colors, &faces)?;
        Ok(ColoredComplex { num_colors, faces })
    }
}

impl fmt::Debug for ColoredComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredComplex[{}]", self.num_colors)?;
        f.debug_set().entries(self.faces.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn face(pairs: &[(u32, u32)]) -> Face {
        Face::from_pairs(pairs).unwrap()
    }

    /// Two-color shorthand: edge (a, b) = {v_a^1, v_b^2}.
    fn edge(a: u32, b: u32) -> Face {
        face(&[(1, a), (2, b)])
    }

    #[test]
    fn closure_of_empty_face() {
        let c = ColoredComplex::from_generators(2, [Face::empty()]).unwrap();
        assert_eq!(c.faces().iter().cloned().collect::<Vec<_>>(), vec![Face::empty()]);
    }

    #[test]
    fn closure_of_one_edge() {
        let c = ColoredComplex::from_generators(2, [edge(1, 1)]).unwrap();
        let expected = [Face::empty(), face(&[(1, 1)]), face(&[(2, 1)]), edge(1, 1)];
        assert_eq!(c.faces(), &BTreeSet::from(expected));
    }

    #[test]
    fn closure_of_two_crossing_edges() {
        let c = ColoredComplex::from_generators(2, [edge(2, 1), edge(1, 2)]).unwrap();
        // Oracle: union of the subsets of each generator.
        let mut expected = BTreeSet::new();
        for g in [edge(2, 1), edge(1, 2)] {
            for mask in 0..4u32 {
                let vs: Vec<(u32, u32)> = g
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| (v.color, v.index))
                    .collect();
                expected.insert(face(&vs));
            }
        }
        assert_eq!(expected.len(), 7);
        assert_eq!(c.faces(), &expected);
    }

    #[test]
    fn generators_out_of_range_or_unsaturated() {
        assert_eq!(
            ColoredComplex::from_generators(1, [edge(1, 1)]),
            Err(Error::ColorOutOfRange { color: 2, num_colors: 1 })
        );
        assert_eq!(
            ColoredComplex::from_generators(2, [edge(2, 1)]),
            Err(Error::Invalid(Violation::IndexGap { color: 1, missing_index: 1 }))
        );
    }

    #[test]
    fn validate_reports_closure_gap() {
        let faces = BTreeSet::from([Face::empty(), face(&[(1, 1)]), edge(1, 1)]);
        assert_eq!(
            validate(2, &faces),
            Err(Violation::ClosureGap { face: edge(1, 1), missing: face(&[(2, 1)]) })
        );
    }

    #[test]
    fn validate_reports_index_gap() {
        let faces = BTreeSet::from([Face::empty(), face(&[(1, 1)]), face(&[(1, 3)])]);
        assert_eq!(validate(1, &faces), Err(Violation::IndexGap { color: 1, missing_index: 2 }));
    }

    #[test]
    fn validate_reports_missing_empty_face() {
        let faces = BTreeSet::from([face(&[(1, 1)])]);
        assert_eq!(validate(1, &faces), Err(Violation::ClosureGap { face: face(&[(1, 1)]), missing: Face::empty() }));
        let faces = BTreeSet::from([edge(1, 1)]);
        assert_eq!(validate(2, &faces), Err(Violation::ClosureGap { face: edge(1, 1), missing: face(&[(1, 1)]) }));
        assert_eq!(validate(1, &BTreeSet::new()), Ok(()));
    }

    #[test]
    fn validate_accepts_closures() {
        let c = ColoredComplex::from_generators(3, [face(&[(1, 2), (3, 1)]), face(&[(1, 1), (2, 1)])]).unwrap();
        assert_eq!(c.validate(), Ok(()));
        assert_eq!(c.vertex_count(1), 2);
        assert_eq!(c.vertex_count(2), 1);
        assert_eq!(c.vertex_count(3), 1);
    }

    #[test]
    fn color_selection() {
        let c = ColoredComplex::from_generators(2, [edge(1, 1)]).unwrap();
        assert_eq!(c.color_selected(ColorSet::full(2)).unwrap(), c);
        let sel = c.color_selected(ColorSet::singleton(1)).unwrap();
        assert_eq!(sel, ColoredComplex::from_generators(1, [face(&[(1, 1)])]).unwrap());
        // Selecting color 2 alone renumbers it to color 1.
        let sel2 = c.color_selected(ColorSet::singleton(2)).unwrap();
        assert_eq!(sel2, sel);
        assert!(matches!(c.color_selected(ColorSet::singleton(3)), Err(Error::ColorOutOfRange { color: 3, .. })));
    }

    #[test]
    fn cone_over_empty_face() {
        let base = ColoredComplex::empty_face(2).unwrap();
        let apex = Vertex::new(3, 1).unwrap();
        let c = base.cone(apex).unwrap();
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.faces(), &BTreeSet::from([Face::empty(), face(&[(3, 1)])]));
    }

    #[test]
    fn cone_over_edge_is_triangle() {
        let base = ColoredComplex::from_generators(2, [edge(1, 1)]).unwrap();
        let c = base.cone(Vertex::new(3, 1).unwrap()).unwrap();
        let simplex = ColoredComplex::from_generators(3, [face(&[(1, 1), (2, 1), (3, 1)])]).unwrap();
        assert_eq!(c, simplex);
        assert_eq!(c.len(), 2 * base.len());
    }

    #[test]
    fn cone_errors() {
        let base = ColoredComplex::from_generators(2, [edge(1, 1)]).unwrap();
        assert!(matches!(base.cone(Vertex { color: 2, index: 1 }), Err(Error::ApexColorInUse(_))));
        assert!(matches!(base.cone(Vertex { color: 3, index: 2 }), Err(Error::ApexIndexNotOne(_))));
    }

    #[test]
    fn union_cases() {
        let c = ColoredComplex::from_generators(2, [edge(2, 1), edge(1, 2)]).unwrap();
        assert_eq!(c.union(&c).unwrap(), c);
        assert_eq!(c.union(&ColoredComplex::empty_face(2).unwrap()).unwrap(), c);
        let a = ColoredComplex::from_generators(2, [edge(2, 1), face(&[(2, 1)])]);
        // edge (2,1) alone is unsaturated; pair it with v_1^1.
        assert!(a.is_err());
        let a = ColoredComplex::from_generators(2, [edge(2, 1), face(&[(1, 1)])]).unwrap();
        let b = ColoredComplex::from_generators(2, [edge(1, 2), face(&[(2, 1)])]).unwrap();
        assert_eq!(a.union(&b).unwrap(), c);
        let lonely = ColoredComplex::from_faces(2, [Face::empty()]).unwrap();
        let gap = ColoredComplex { num_colors: 1, faces: BTreeSet::from([Face::empty(), face(&[(1, 2)])]) };
        assert!(matches!(lonely.union(&gap), Err(Error::Invalid(Violation::IndexGap { color: 1, .. }))));
    }

    #[test]
    fn equality_is_literal() {
        let a = ColoredComplex::from_generators(2, [edge(1, 1)]).unwrap();
        let b = ColoredComplex::from_generators(2, [face(&[(1, 1)]), face(&[(2, 1)])]).unwrap();
        assert_eq!(a, a.clone());
        assert_ne!(a, b);
        assert_ne!(a, a.with_num_colors(3).unwrap());
    }

    #[test]
    fn too_many_colors() {
        assert!(matches!(ColoredComplex::void(MAX_COLORS + 1), Err(Error::TooManyColors { .. })));
    }
}
