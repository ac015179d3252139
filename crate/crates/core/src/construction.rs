//! Extending a color-shifted complex so that its flag f-vector pins it down.
//!
//! Given a color-shifted `Δ` over `n` colors with shift-maximal faces
//! `F_1, ..., F_k`, let `Γ_p` be the principal down-set of `F_p` and `w_p` the
//! first vertex of the new color `n + p`. Then
//!
//! ```text
//! Γ = Δ ∪ cone(Γ_1, w_1) ∪ ... ∪ cone(Γ_k, w_k)      over m = n + k colors
//! ```
//!
//! restricts to `Δ` on the colors `[n]`, and no other color-shifted complex on
//! `m` colors shares its flag f-vector. The second fact is checked by search in
//! [`crate::oracle::verify_uniqueness`].
//!
//! The bookkeeping behind the uniqueness argument is recorded in the
//! [`ConstructionReport`]: each new color has one vertex, and for
//! `F_p = {v_{a_1}^{i_1}, ..., v_{a_j}^{i_j}}` the edges between color `i_r`
//! and color `n + p` number exactly `a_r`. We also record the count on the full
//! color set `colorSet(F_p) ∪ {n + p}`, which is `Π a_r` since every face of
//! `Γ_p` on `colorSet(F_p)` gets coned.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::ColoredComplex;
use crate::face::{ColorSet, Face, Vertex};
use crate::flag::flag_f;
use crate::shift::{principal_downset, shift_maximal_faces, shift_violation, DominancePair};
use crate::{Error, MAX_COLORS};

/// A claimed flag number `f_colors(Γ) = count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PredictedCount {
    pub colors: ColorSet,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    /// Colors of the input complex.
    pub n: usize,
    /// Number of shift-maximal faces.
    pub k: usize,
    /// `n + k`.
    pub m: usize,
    pub shift_maximal: Vec<Face>,
    /// `apexes[p - 1] = v_1^{n+p}`, coned over the down-set of `shift_maximal[p - 1]`.
    pub apexes: Vec<Vertex>,
    /// `f_{n+p} = 1` for every `p`.
    pub predicted_singletons: Vec<PredictedCount>,
    /// `f_{r, n+p} = a_r` for every `p` and every color `r` of `F_p`.
    pub predicted_edges: Vec<PredictedCount>,
    /// `f_{colorSet(F_p) ∪ {n+p}} = Π a_r`, for faces with at least two vertices.
    pub predicted_tops: Vec<PredictedCount>,
}

impl ConstructionReport {
    pub fn predictions(&self) -> impl Iterator<Item = &PredictedCount> {
        self.predicted_singletons.iter().chain(&self.predicted_edges).chain(&self.predicted_tops)
    }
}

/// Builds `Γ` from a non-empty color-shifted `delta`.
pub fn construct_gamma(delta: &ColoredComplex) -> Result<(ColoredComplex, ConstructionReport), Error> {
    if delta.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let shift_maximal = shift_maximal_faces(delta)?;
    let n = delta.num_colors();
    let k = shift_maximal.len();
    let m = n + k;
    if m > MAX_COLORS {
        return Err(Error::TooManyColors { requested: m, max: MAX_COLORS });
    }

    let mut gamma = delta.with_num_colors(m)?;
    let mut apexes = Vec::with_capacity(k);
    let mut predicted_singletons = Vec::with_capacity(k);
    let mut predicted_edges = Vec::new();
    let mut predicted_tops = Vec::new();
    for (p, top) in shift_maximal.iter().enumerate() {
        let apex_color = (n + p + 1) as u32;
        let apex = Vertex { color: apex_color, index: 1 };
        let cone = principal_downset(delta, top)?.cone(apex)?;
        gamma = gamma.union(&cone)?;
        apexes.push(apex);

        let apex_set = ColorSet::singleton(apex_color);
        predicted_singletons.push(PredictedCount { colors: apex_set, count: 1 });
        for v in top.vertices() {
            predicted_edges.push(PredictedCount { colors: apex_set.with(v.color), count: v.index as u64 });
        }
        if top.len() >= 2 {
            let count = top.indices().try_fold(1u64, |acc, a| acc.checked_mul(a as u64)).ok_or(Error::Overflow)?;
            predicted_tops.push(PredictedCount { colors: top.colors().with(apex_color), count });
        }
    }

    let report = ConstructionReport {
        n,
        k,
        m,
        shift_maximal,
        apexes,
        predicted_singletons,
        predicted_edges,
        predicted_tops,
    };
    Ok((gamma, report))
}

/// The first claim about a constructed complex that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionFailure {
    /// The report's own shape is off (`m != n + k`, apex list, color counts).
    MalformedReport(&'static str),
    /// Selecting colors `1..=n` does not give back the input.
    SelectionMismatch,
    FlagMismatch { colors: ColorSet, predicted: u64, actual: i64 },
    NotColorShifted(DominancePair),
    /// A face touching colors above `n` has more than one of them.
    MixedApexes(Face),
}

impl fmt::Display for ConstructionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionFailure::MalformedReport(why) => write!(f, "malformed report: {why}"),
            ConstructionFailure::SelectionMismatch => {
                f.write_str("selecting the original colors does not recover the input complex")
            }
            ConstructionFailure::FlagMismatch { colors, predicted, actual } => {
                write!(f, "f_{colors} is {actual}, predicted {predicted}")
            }
            ConstructionFailure::NotColorShifted(w) => write!(f, "result is not color-shifted: {w}"),
            ConstructionFailure::MixedApexes(face) => {
                write!(f, "face {face} has more than one vertex of an added color")
            }
        }
    }
}

/// Re-checks the claims attached to a construction:
///
/// 1. selecting colors `1..=n` of `gamma` gives `delta`,
/// 2. every predicted flag number holds,
/// 3. `gamma` is color-shifted,
/// 4. no face of `gamma` has two vertices of colors above `n`.
pub fn verify_construction(
    delta: &ColoredComplex,
    gamma: &ColoredComplex,
    report: &ConstructionReport,
) -> Result<(), ConstructionFailure> {
    if report.m != report.n + report.k {
        return Err(ConstructionFailure::MalformedReport("m is not n + k"));
    }
    if report.n != delta.num_colors() || report.m != gamma.num_colors() {
        return Err(ConstructionFailure::MalformedReport("color counts disagree with the complexes"));
    }
    if report.shift_maximal.len() != report.k || report.apexes.len() != report.k {
        return Err(ConstructionFailure::MalformedReport("expected k shift-maximal faces and k apexes"));
    }
    let apexes_ok = report
        .apexes
        .iter()
        .enumerate()
        .all(|(p, a)| a.color as usize == report.n + p + 1 && a.index == 1);
    if !apexes_ok {
        return Err(ConstructionFailure::MalformedReport("apex p must be v_1^(n+p)"));
    }

    let selected = gamma
        .color_selected(ColorSet::full(report.n))
        .map_err(|_| ConstructionFailure::SelectionMismatch)?;
    if &selected != delta {
        return Err(ConstructionFailure::SelectionMismatch);
    }

    let f = flag_f(gamma);
    for claim in report.predictions() {
        let actual = f.get(claim.colors);
        if actual < 0 || actual as u64 != claim.count {
            return Err(ConstructionFailure::FlagMismatch { colors: claim.colors, predicted: claim.count, actual });
        }
    }

    if let Some(w) = shift_violation(gamma) {
        return Err(ConstructionFailure::NotColorShifted(w));
    }

    let original = ColorSet::full(report.n);
    if let Some(face) = gamma.faces().iter().find(|face| {
        let added = face.colors().bits() & !original.bits();
        added.count_ones() > 1
    }) {
        return Err(ConstructionFailure::MixedApexes(face.clone()));
    }
    Ok(())
}
