//! Flag f-vectors, flag h-vectors and coarse f-vectors.
//!
//! For a complex over `n` colors and `S ⊆ [n]`, `f_S` counts the faces whose
//! color set is exactly `S`. The flag h-vector is its inclusion-exclusion
//! transform
//!
//! ```text
//! h_S = Σ_{T ⊆ S} (-1)^{|S|-|T|} f_T        f_S = Σ_{T ⊆ S} h_T
//! ```
//!
//! and the ordinary f-vector forgets colors: `f_{i-1} = Σ_{|S| = i} f_S`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::ColoredComplex;
use crate::face::ColorSet;
use crate::{Error, MAX_COLORS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagKind {
    F,
    H,
}

impl fmt::Display for FlagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlagKind::F => "f",
            FlagKind::H => "h",
        })
    }
}

/// A total map from the subsets of `[n]` to signed counts, tagged with its
/// semantics. Stored densely, indexed by the subset bitmask.
///
/// The transforms in this module are plain linear maps and accept any counts.
/// Consumers that need a realistic f-vector (nonnegative, `f_∅ ∈ {0, 1}`) check
/// it with [`FlagVector::check_f_semantics`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagVector {
    num_colors: usize,
    kind: FlagKind,
    counts: Vec<i64>,
}

impl FlagVector {
    pub fn zeros(num_colors: usize, kind: FlagKind) -> Result<Self, Error> {
        if num_colors > MAX_COLORS {
            return Err(Error::TooManyColors { requested: num_colors, max: MAX_COLORS });
        }
        Ok(FlagVector { num_colors, kind, counts: vec![0; 1 << num_colors] })
    }

    /// Builds a vector from `(color set, count)` entries; unnamed sets are zero
    /// and a repeated set keeps its last count.
    pub fn from_entries<I>(num_colors: usize, kind: FlagKind, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (ColorSet, i64)>,
    {
        let mut v = FlagVector::zeros(num_colors, kind)?;
        for (s, count) in entries {
            v.set(s, count)?;
        }
        Ok(v)
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn kind(&self) -> FlagKind {
        self.kind
    }

    /// `0` for sets outside `[n]`.
    pub fn get(&self, colors: ColorSet) -> i64 {
        self.counts.get(colors.bits() as usize).copied().unwrap_or(0)
    }

    pub fn set(&mut self, colors: ColorSet, count: i64) -> Result<(), Error> {
        if !colors.is_subset(ColorSet::full(self.num_colors)) {
            return Err(Error::ColorOutOfRange { color: colors.max_color(), num_colors: self.num_colors });
        }
        self.counts[colors.bits() as usize] = count;
        Ok(())
    }

    /// All `2^n` entries in canonical subset order.
    pub fn iter(&self) -> impl Iterator<Item = (ColorSet, i64)> + '_ {
        ColorSet::all_subsets(self.num_colors).into_iter().map(move |s| (s, self.get(s)))
    }

    /// Requires kind `f`, every count nonnegative and `f_∅ ∈ {0, 1}`.
    pub fn check_f_semantics(&self) -> Result<(), Error> {
        self.expect_kind(FlagKind::F)?;
        if let Some((colors, count)) = self.iter().find(|&(_, c)| c < 0) {
            return Err(Error::NegativeCount { colors, count });
        }
        if self.get(ColorSet::EMPTY) > 1 {
            return Err(Error::InvalidTarget("f of the empty set must be 0 or 1"));
        }
        Ok(())
    }

    fn expect_kind(&self, expected: FlagKind) -> Result<(), Error> {
        if self.kind != expected {
            return Err(Error::KindMismatch { expected, found: self.kind });
        }
        Ok(())
    }
}

impl fmt::Debug for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "flag {}[{}]", self.kind, self.num_colors)?;
        f.debug_map().entries(self.iter()).finish()
    }
}

/// The flag f-vector of `c`.
pub fn flag_f(c: &ColoredComplex) -> FlagVector {
    let mut v = FlagVector::zeros(c.num_colors(), FlagKind::F).expect("complexes respect MAX_COLORS");
    for face in c.faces() {
        v.counts[face.colors().bits() as usize] += 1;
    }
    v
}

/// Signed zeta transform over the subset lattice: for each color, fold every
/// set without it into the set with it, multiplying by `sign`.
fn subset_transform(counts: &mut [i64], num_colors: usize, sign: i64) -> Result<(), Error> {
    for bit in 0..num_colors {
        let b = 1usize << bit;
        for s in 0..counts.len() {
            if s & b != 0 {
                let lower = counts[s ^ b].checked_mul(sign).ok_or(Error::Overflow)?;
                counts[s] = counts[s].checked_add(lower).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(())
}

/// Flag h-vector of a flag f-vector.
pub fn h_from_f(f: &FlagVector) -> Result<FlagVector, Error> {
    f.expect_kind(FlagKind::F)?;
    let mut counts = f.counts.clone();
    subset_transform(&mut counts, f.num_colors, -1)?;
    Ok(FlagVector { num_colors: f.num_colors, kind: FlagKind::H, counts })
}

/// Recovers the flag f-vector from a flag h-vector.
pub fn f_from_h(h: &FlagVector) -> Result<FlagVector, Error> {
    h.expect_kind(FlagKind::H)?;
    let mut counts = h.counts.clone();
    subset_transform(&mut counts, h.num_colors, 1)?;
    Ok(FlagVector { num_colors: h.num_colors, kind: FlagKind::F, counts })
}

/// Color-blind face counts `(f_{-1}, f_0, ..., f_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoarseFVector(pub Vec<u64>);

impl CoarseFVector {
    /// Entry for faces on `i` vertices, i.e. `f_{i-1}`.
    pub fn faces_on(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

pub fn coarse_f(f: &FlagVector) -> Result<CoarseFVector, Error> {
    f.expect_kind(FlagKind::F)?;
    let mut entries = vec![0u64; f.num_colors + 1];
    for (s, count) in f.iter() {
        let count = u64::try_from(count).map_err(|_| Error::NegativeCount { colors: s, count })?;
        let slot = &mut entries[s.len()];
        *slot = slot.checked_add(count).ok_or(Error::Overflow)?;
    }
    Ok(CoarseFVector(entries))
}

/// Decides whether a two-color flag f-vector belongs to a non-empty complex:
/// `f_∅ = 1` and `f_1 · f_2 ≥ f_12`.
///
/// The all-zero vector (the complex with no faces) is reported unrealizable.
pub fn two_color_realizable(f: &FlagVector) -> Result<bool, Error> {
    f.expect_kind(FlagKind::F)?;
    if f.num_colors != 2 {
        return Err(Error::WrongNumColors { expected: 2, found: f.num_colors });
    }
    if let Some((colors, count)) = f.iter().find(|&(_, c)| c < 0) {
        return Err(Error::NegativeCount { colors, count });
    }
    let f1 = f.get(ColorSet::singleton(1)) as i128;
    let f2 = f.get(ColorSet::singleton(2)) as i128;
    let f12 = f.get(ColorSet::full(2)) as i128;
    Ok(f.get(ColorSet::EMPTY) == 1 && f1 * f2 >= f12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Face;

    fn two(values: [i64; 4], kind: FlagKind) -> FlagVector {
        // (∅, {1}, {2}, {1,2}) in canonical order.
        FlagVector::from_entries(2, kind, ColorSet::all_subsets(2).into_iter().zip(values)).unwrap()
    }

    fn values(v: &FlagVector) -> Vec<i64> {
        v.iter().map(|(_, c)| c).collect()
    }

    /// Direct alternating sum, one subset pair at a time.
    fn h_oracle(f: &FlagVector) -> Vec<i64> {
        ColorSet::all_subsets(f.num_colors())
            .into_iter()
            .map(|s| {
                s.subsets()
                    .map(|t| {
                        let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
                        sign * f.get(t)
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn flag_f_examples() {
        let c = ColoredComplex::empty_face(2).unwrap();
        assert_eq!(values(&flag_f(&c)), [1, 0, 0, 0]);
        let edge = ColoredComplex::from_generators(2, [Face::from_pairs(&[(1, 1), (2, 1)]).unwrap()]).unwrap();
        assert_eq!(values(&flag_f(&edge)), [1, 1, 1, 1]);
    }

    #[test]
    fn h_examples() {
        let c = ColoredComplex::empty_face(0).unwrap();
        let h = h_from_f(&flag_f(&c)).unwrap();
        assert_eq!(h.kind(), FlagKind::H);
        assert_eq!(values(&h), [1]);
        // With colors present, {∅} has h_S = (-1)^|S|.
        let f = flag_f(&ColoredComplex::empty_face(3).unwrap());
        assert_eq!(h_oracle(&f), [1, -1, -1, -1, 1, 1, 1, -1]);
        assert_eq!(values(&h_from_f(&f).unwrap()), h_oracle(&f));

        let f = two([1, 1, 1, 1], FlagKind::F);
        assert_eq!(h_oracle(&f), [1, 0, 0, 0]);
        assert_eq!(values(&h_from_f(&f).unwrap()), [1, 0, 0, 0]);

        let f = two([1, 2, 1, 2], FlagKind::F);
        assert_eq!(h_oracle(&f), [1, 1, 0, 0]);
        assert_eq!(values(&h_from_f(&f).unwrap()), [1, 1, 0, 0]);
    }

    #[test]
    fn f_from_h_examples() {
        let h = FlagVector::from_entries(3, FlagKind::H, [(ColorSet::EMPTY, 1)]).unwrap();
        assert!(values(&f_from_h(&h).unwrap()).iter().all(|&c| c == 1));

        let f = two([1, 2, 1, 2], FlagKind::F);
        assert_eq!(f_from_h(&h_from_f(&f).unwrap()).unwrap(), f);

        let zero = FlagVector::zeros(4, FlagKind::H).unwrap();
        assert_eq!(values(&f_from_h(&zero).unwrap()), [0; 16]);
    }

    #[test]
    fn kind_is_checked() {
        let f = two([1, 1, 1, 1], FlagKind::F);
        assert!(matches!(f_from_h(&f), Err(Error::KindMismatch { .. })));
        let h = two([1, 1, 1, 1], FlagKind::H);
        assert!(matches!(h_from_f(&h), Err(Error::KindMismatch { .. })));
        assert!(matches!(coarse_f(&h), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn transform_overflow_is_reported() {
        let f = FlagVector::from_entries(1, FlagKind::F, [(ColorSet::EMPTY, i64::MIN), (ColorSet::singleton(1), 1)]);
        assert_eq!(h_from_f(&f.unwrap()), Err(Error::Overflow));
    }

    #[test]
    fn coarse_examples() {
        let c = ColoredComplex::empty_face(0).unwrap();
        assert_eq!(coarse_f(&flag_f(&c)).unwrap(), CoarseFVector(vec![1]));
        assert_eq!(coarse_f(&two([1, 2, 1, 2], FlagKind::F)).unwrap(), CoarseFVector(vec![1, 3, 2]));
        let simplex =
            ColoredComplex::from_generators(3, [Face::from_pairs(&[(1, 1), (2, 1), (3, 1)]).unwrap()]).unwrap();
        assert_eq!(coarse_f(&flag_f(&simplex)).unwrap(), CoarseFVector(vec![1, 3, 3, 1]));
    }

    #[test]
    fn two_color_criterion() {
        assert!(two_color_realizable(&two([1, 2, 3, 5], FlagKind::F)).unwrap());
        assert!(!two_color_realizable(&two([1, 2, 3, 7], FlagKind::F)).unwrap());
        assert!(!two_color_realizable(&two([0, 0, 0, 0], FlagKind::F)).unwrap());
        assert!(two_color_realizable(&two([1, 2, 3, 6], FlagKind::F)).unwrap());
        let three = FlagVector::zeros(3, FlagKind::F).unwrap();
        assert!(matches!(two_color_realizable(&three), Err(Error::WrongNumColors { .. })));
        assert!(matches!(
            two_color_realizable(&two([1, -1, 0, 0], FlagKind::F)),
            Err(Error::NegativeCount { .. })
        ));
    }

    #[test]
    fn set_rejects_out_of_range() {
        let mut v = FlagVector::zeros(2, FlagKind::F).unwrap();
        assert!(v.set(ColorSet::singleton(3), 1).is_err());
        assert_eq!(v.get(ColorSet::singleton(3)), 0);
    }
}
