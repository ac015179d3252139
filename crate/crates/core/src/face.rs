use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, MAX_COLORS};

/// A set of colors drawn from `1..=MAX_COLORS`, stored as a bitmask
/// (bit `c - 1` is color `c`).
///
/// The [`Ord`] impl is the canonical subset order: by size, then
/// lexicographically on the ascending color lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            ColorSet(u32::MAX)
        } else {
            ColorSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(color: u32) -> Self {
        debug_assert!((1..=32).contains(&color));
        ColorSet(1 << (color - 1))
    }

    pub fn from_colors<I: IntoIterator<Item = u32>>(colors: I) -> Result<Self, Error> {
        let mut set = ColorSet::EMPTY;
        for c in colors {
            if c == 0 || c as usize > MAX_COLORS {
                return Err(Error::ColorOutOfRange { color: c, num_colors: MAX_COLORS });
            }
            set = set.with(c);
        }
        Ok(set)
    }

    pub fn contains(self, color: u32) -> bool {
        (1..=32).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    pub fn with(self, color: u32) -> Self {
        ColorSet(self.0 | ColorSet::singleton(color).0)
    }

    pub fn without(self, color: u32) -> Self {
        ColorSet(self.0 & !ColorSet::singleton(color).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    /// Largest color in the set, or 0 for the empty set.
    pub fn max_color(self) -> u32 {
        32 - self.0.leading_zeros()
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros();
                bits &= bits - 1;
                Some(c + 1)
            }
        })
    }

    /// Lexicographic comparison of the ascending color lists, without the
    /// size-first rule of the canonical order (`[1] < [1, 2] < [2]`).
    pub fn lex_cmp(self, other: ColorSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `{1, ..., n}` in canonical order.
    pub fn all_subsets(n: usize) -> Vec<ColorSet> {
        let mut v: Vec<ColorSet> = (0..1u32 << n).map(ColorSet).collect();
        v.sort();
        v
    }

    /// Subsets of `self`, including `self` and the empty set, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        // Standard submask walk, starting from the full mask.
        let full = self.0;
        let mut next = Some(full);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(ColorSet(cur))
        })
    }
}

impl Ord for ColorSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for ColorSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// The `index`-th vertex of color `color`, written `v_index^color`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vertex {
    pub color: u32,
    pub index: u32,
}

impl Vertex {
    pub fn new(color: u32, index: u32) -> Result<Self, Error> {
        if color == 0 || color as usize > MAX_COLORS || index == 0 {
            return Err(Error::InvalidVertex { color, index });
        }
        Ok(Vertex { color, index })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{}^{}", self.index, self.color)
    }
}

/// A rainbow face: at most one vertex per color, kept sorted by color.
///
/// Faces are ordered canonically by cardinality, then by color list, then by
/// index list. Within a fixed color set this is the lexicographic order on
/// index vectors, which is a linear extension of the dominance order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Face {
    vertices: Vec<Vertex>,
}

impl Face {
    pub fn empty() -> Self {
        Face::default()
    }

    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, Error> {
        let mut vertices: Vec<Vertex> = vertices.into_iter().collect();
        for v in &vertices {
            Vertex::new(v.color, v.index)?;
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0].color == w[1].color) {
            return Err(Error::DuplicateColor { color: w[0].color });
        }
        Ok(Face { vertices })
    }

    /// Builds a face from `(color, index)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self, Error> {
        Face::new(pairs.iter().map(|&(color, index)| Vertex { color, index }))
    }

    /// Builds a face over `colors` (ascending) with the given indices. The
    /// caller guarantees validity.
    pub(crate) fn from_parts(colors: ColorSet, indices: &[u32]) -> Self {
        debug_assert_eq!(colors.len(), indices.len());
        Face {
            vertices: colors
                .iter()
                .zip(indices)
                .map(|(color, &index)| Vertex { color, index })
                .collect(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn colors(&self) -> ColorSet {
        self.vertices.iter().fold(ColorSet::EMPTY, |s, v| s.with(v.color))
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().map(|v| v.index)
    }

    pub fn index_of(&self, color: u32) -> Option<u32> {
        self.vertices
            .binary_search_by_key(&color, |v| v.color)
            .ok()
            .map(|i| self.vertices[i].index)
    }

    pub fn max_color(&self) -> u32 {
        self.vertices.last().map_or(0, |v| v.color)
    }

    /// Adds `vertex`, replacing any vertex of the same color.
    pub fn with(&self, vertex: Vertex) -> Face {
        let mut vertices = self.vertices.clone();
        match vertices.binary_search_by_key(&vertex.color, |v| v.color) {
            Ok(i) => vertices[i] = vertex,
            Err(i) => vertices.insert(i, vertex),
        }
        Face { vertices }
    }

    pub fn without_color(&self, color: u32) -> Face {
        Face {
            vertices: self.vertices.iter().copied().filter(|v| v.color != color).collect(),
        }
    }

    /// Faces obtained by deleting one vertex.
    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        self.vertices.iter().map(move |v| self.without_color(v.color))
    }

    /// Every subset of this face, the face itself included.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.vertices.len();
        (0u32..1 << n).map(move |mask| Face {
            vertices: (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect(),
        })
    }

    /// Faces covered by this one in the dominance order: drop a vertex, or
    /// lower one index by one.
    pub fn lower_covers(&self) -> impl Iterator<Item = Face> + '_ {
        let drops = self.facets();
        let lowers = self.vertices.iter().enumerate().filter(|(_, v)| v.index > 1).map(move |(i, _)| {
            let mut vertices = self.vertices.clone();
            vertices[i].index -= 1;
            Face { vertices }
        });
        drops.chain(lowers)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.iter().map(|v| v.color).cmp(other.vertices.iter().map(|v| v.color)))
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
