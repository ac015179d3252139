//! Exhaustive search over colored complexes at desk scale.
//!
//! The main entry point, [`enumerate_color_shifted_with_flag`], lists every
//! color-shifted complex with a given flag f-vector. A color-shifted complex is
//! a down-set of the dominance order, and its vertex counts are read off the
//! target, so the search fixes the vertices and then walks the color sets of
//! size two and up in canonical order. For each color set `S` it picks exactly
//! `target(S)` faces forming an order ideal of the index grid, restricted to
//! cells whose facets were already chosen. Ideals are generated by adding cells
//! in increasing lexicographic order, each cell only once all of its
//! index-lowered neighbours are in; every ideal arises from exactly one such
//! sequence.
//!
//! Budgets count search-tree nodes. Running out is reported as an inconclusive
//! outcome, never as a negative answer.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::complex::ColoredComplex;
use crate::construction::{construct_gamma, ConstructionReport};
use crate::face::{ColorSet, Face};
use crate::flag::{flag_f, FlagKind, FlagVector};
use crate::shift::for_each_index_vector;
use crate::{Error, MAX_COLORS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Cap on search-tree nodes (partial-assignment extensions).
    pub max_nodes: u64,
    /// Stop once this many witnesses are found.
    pub max_witnesses: usize,
}

impl SearchBudget {
    pub const DEFAULT_MAX_NODES: u64 = 10_000_000;
    pub const DEFAULT_MAX_WITNESSES: usize = 2;

    pub fn new(max_nodes: u64, max_witnesses: usize) -> Self {
        SearchBudget { max_nodes: max_nodes.max(1), max_witnesses: max_witnesses.max(1) }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_MAX_NODES, Self::DEFAULT_MAX_WITNESSES)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Witnesses in canonical complex order.
    pub witnesses: Vec<ColoredComplex>,
    /// The whole search space was explored; `witnesses` is complete.
    pub exhausted: bool,
    /// The search stopped at `max_witnesses`; more may exist.
    pub truncated: bool,
    pub nodes_visited: u64,
}

#[derive(Debug)]
enum Stop {
    Budget,
    Visitor,
}

/// Node accounting shared by both searches.
struct Meter {
    nodes: u64,
    max_nodes: u64,
}

impl Meter {
    fn charge(&mut self, n: u64) -> Result<(), Stop> {
        self.nodes = self.nodes.saturating_add(n);
        if self.nodes > self.max_nodes {
            Err(Stop::Budget)
        } else {
            Ok(())
        }
    }
}

fn vertex_faces(counts: &[u32]) -> BTreeSet<Face> {
    let mut faces = BTreeSet::from([Face::empty()]);
    for (i, &t) in counts.iter().enumerate() {
        let color = ColorSet::singleton(i as u32 + 1);
        faces.extend((1..=t).map(|j| Face::from_parts(color, &[j])));
    }
    faces
}

/// Cells of the `colors` grid (bounded by the vertex counts) whose facets are
/// all in `faces`, in lexicographic order.
fn open_cells(colors: ColorSet, counts: &[u32], faces: &BTreeSet<Face>, meter: &mut Meter) -> Result<Vec<Face>, Stop> {
    let bounds: Vec<u32> = colors.iter().map(|c| counts[c as usize - 1]).collect();
    let size = bounds.iter().try_fold(1u64, |acc, &b| acc.checked_mul(b as u64)).unwrap_or(u64::MAX);
    meter.charge(size.min(u64::MAX / 2))?;
    let mut cells = Vec::new();
    for_each_index_vector(&bounds, |idx| {
        let f = Face::from_parts(colors, idx);
        if f.facets().all(|g| faces.contains(&g)) {
            cells.push(f);
        }
    });
    Ok(cells)
}

fn has_lower_indices(cell: &Face, faces: &BTreeSet<Face>) -> bool {
    cell.vertices().iter().filter(|v| v.index > 1).all(|v| {
        let mut lower = *v;
        lower.index -= 1;
        faces.contains(&cell.with(lower))
    })
}

struct ShiftedSearch<'v> {
    counts: Vec<u32>,
    layers: Vec<(ColorSet, usize)>,
    faces: BTreeSet<Face>,
    meter: Meter,
    visit: &'v mut dyn FnMut(&BTreeSet<Face>) -> ControlFlow<()>,
}

impl ShiftedSearch<'_> {
    fn layer(&mut self, li: usize) -> Result<(), Stop> {
        let Some(&(colors, target)) = self.layers.get(li) else {
            return match (self.visit)(&self.faces) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Stop::Visitor),
            };
        };
        if target == 0 {
            return self.layer(li + 1);
        }
        let cells = open_cells(colors, &self.counts, &self.faces, &mut self.meter)?;
        if cells.len() < target {
            return Ok(());
        }
        self.fill(li, &cells, 0, target)
    }

    fn fill(&mut self, li: usize, cells: &[Face], start: usize, remaining: usize) -> Result<(), Stop> {
        if remaining == 0 {
            return self.layer(li + 1);
        }
        for j in start..cells.len() {
            if cells.len() - j < remaining {
                break;
            }
            let cell = &cells[j];
            if !has_lower_indices(cell, &self.faces) {
                continue;
            }
            self.meter.charge(1)?;
            self.faces.insert(cell.clone());
            let r = self.fill(li, cells, j + 1, remaining - 1);
            self.faces.remove(cell);
            r?;
        }
        Ok(())
    }
}

/// Runs the color-shifted search, handing each complete face set to `visit`.
/// Returns `(exhausted, stopped_by_visitor, nodes)`.
fn search_shifted(
    target: &FlagVector,
    max_nodes: u64,
    visit: &mut dyn FnMut(&BTreeSet<Face>) -> ControlFlow<()>,
) -> Result<(bool, bool, u64), Error> {
    target.check_f_semantics()?;
    if target.get(ColorSet::EMPTY) != 1 {
        return Err(Error::InvalidTarget("f of the empty set must be 1"));
    }
    let n = target.num_colors();
    let counts = (1..=n as u32)
        .map(|c| u32::try_from(target.get(ColorSet::singleton(c))).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>, _>>()?;
    let layers = ColorSet::all_subsets(n)
        .into_iter()
        .filter(|s| s.len() >= 2)
        .map(|s| usize::try_from(target.get(s)).map(|t| (s, t)).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>, _>>()?;
    let mut search = ShiftedSearch {
        faces: vertex_faces(&counts),
        counts,
        layers,
        meter: Meter { nodes: 0, max_nodes },
        visit,
    };
    let result = search.layer(0);
    let nodes = search.meter.nodes;
    Ok(match result {
        Ok(()) => (true, false, nodes),
        Err(Stop::Visitor) => (false, true, nodes),
        Err(Stop::Budget) => (false, false, nodes),
    })
}

/// Every color-shifted complex over `target.num_colors()` colors whose flag
/// f-vector is `target`.
///
/// `target` must be an f-vector with nonnegative counts and `f_∅ = 1`.
pub fn enumerate_color_shifted_with_flag(target: &FlagVector, budget: SearchBudget) -> Result<SearchOutcome, Error> {
    let n = target.num_colors();
    let mut witnesses = Vec::new();
    let cap = budget.max_witnesses.max(1);
    let (exhausted, truncated, nodes_visited) = search_shifted(target, budget.max_nodes, &mut |faces| {
        witnesses.push(ColoredComplex::from_valid_faces(n, faces.clone()));
        if witnesses.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    witnesses.sort();
    Ok(SearchOutcome { witnesses, exhausted, truncated, nodes_visited })
}

/// Number of color-shifted complexes with flag f-vector `target`, or
/// [`Error::BudgetExhausted`].
pub fn count_color_shifted_with_flag(target: &FlagVector, max_nodes: u64) -> Result<u64, Error> {
    let mut count = 0u64;
    let (exhausted, _, nodes) = search_shifted(target, max_nodes, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    if !exhausted {
        return Err(Error::BudgetExhausted { nodes });
    }
    Ok(count)
}

/// A color-shifted complex with the same flag f-vector as `source`.
///
/// Only color-shifted candidates are searched; an exhausted search with no
/// witness would contradict the existence of such a complex.
pub fn find_color_shifted_with_flag(source: &ColoredComplex, budget: SearchBudget) -> Result<SearchOutcome, Error> {
    if source.is_empty() {
        return Err(Error::EmptyComplex);
    }
    enumerate_color_shifted_with_flag(&flag_f(source), budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unique,
    NotUnique,
    /// The budget ran out before the question was settled.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct UniquenessCheck {
    pub verdict: Verdict,
    pub gamma: ColoredComplex,
    pub report: ConstructionReport,
    pub outcome: SearchOutcome,
}

/// Builds `Γ` from `delta` and searches for every color-shifted complex with
/// `Γ`'s flag f-vector. Unique means the search was exhaustive and found only
/// `Γ`. At least two witnesses are always requested so that a second one is
/// seen.
pub fn verify_uniqueness(delta: &ColoredComplex, budget: SearchBudget) -> Result<UniquenessCheck, Error> {
    let (gamma, report) = construct_gamma(delta)?;
    let budget = SearchBudget { max_witnesses: budget.max_witnesses.max(2), ..budget };
    let outcome = enumerate_color_shifted_with_flag(&flag_f(&gamma), budget)?;
    let verdict = if outcome.exhausted {
        if outcome.witnesses.len() == 1 && outcome.witnesses[0] == gamma {
            Verdict::Unique
        } else {
            Verdict::NotUnique
        }
    } else if outcome.truncated {
        Verdict::NotUnique
    } else {
        Verdict::Inconclusive
    };
    Ok(UniquenessCheck { verdict, gamma, report, outcome })
}

/// Color-shifted two-colored complexes with `edges` edges and `edges` vertices
/// of each color, i.e. Young diagrams with `edges` cells.
pub fn count_two_color_shifted_by_edges(edges: u32) -> Result<u64, Error> {
    let e = edges as i64;
    let target = FlagVector::from_entries(2, FlagKind::F, ColorSet::all_subsets(2).into_iter().zip([1, e, e, e]))?;
    count_color_shifted_with_flag(&target, SearchBudget::DEFAULT_MAX_NODES)
}

/// The number of integer partitions of `n`, by Euler's pentagonal number
/// recurrence. Fails once a value exceeds `u64`.
pub fn partition_number(n: u32) -> Result<u64, Error> {
    let n = n as usize;
    let mut p: Vec<u64> = vec![1];
    for m in 1..=n {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p.push(u64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(p[n])
}

/// Calls `visit` on every valid colored complex over `num_colors` colors with
/// at most `vertex_bounds[i]` vertices of color `i + 1`, each exactly once.
/// The complex with no faces is not produced.
///
/// Returns the number of search nodes used, or [`Error::BudgetExhausted`]
/// (after the complexes already produced).
pub fn for_each_colored_complex(
    num_colors: usize,
    vertex_bounds: &[u32],
    budget: SearchBudget,
    mut visit: impl FnMut(ColoredComplex) -> ControlFlow<()>,
) -> Result<u64, Error> {
    if num_colors > MAX_COLORS {
        return Err(Error::TooManyColors { requested: num_colors, max: MAX_COLORS });
    }
    if vertex_bounds.len() != num_colors {
        return Err(Error::WrongNumColors { expected: num_colors, found: vertex_bounds.len() });
    }
    let layers: Vec<ColorSet> = ColorSet::all_subsets(num_colors).into_iter().filter(|s| s.len() >= 2).collect();
    let mut meter = Meter { nodes: 0, max_nodes: budget.max_nodes };
    let mut counts = vec![0u32; num_colors];
    loop {
        let mut walk = FreeSearch {
            num_colors,
            counts: &counts,
            layers: &layers,
            faces: vertex_faces(&counts),
            meter: &mut meter,
            visit: &mut visit,
        };
        match walk.layer(0) {
            Ok(()) => {}
            Err(Stop::Visitor) => return Ok(meter.nodes),
            Err(Stop::Budget) => return Err(Error::BudgetExhausted { nodes: meter.nodes }),
        }
        // Next vertex-count vector, odometer style.
        let mut pos = 0;
        loop {
            if pos == num_colors {
                return Ok(meter.nodes);
            }
            if counts[pos] < vertex_bounds[pos] {
                counts[pos] += 1;
                break;
            }
            counts[pos] = 0;
            pos += 1;
        }
    }
}

/// Collects [`for_each_colored_complex`].
pub fn enumerate_all_colored_complexes(
    num_colors: usize,
    vertex_bounds: &[u32],
    budget: SearchBudget,
) -> Result<Vec<ColoredComplex>, Error> {
    let mut out = Vec::new();
    for_each_colored_complex(num_colors, vertex_bounds, budget, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Arbitrary (not necessarily shifted) complexes with fixed vertex counts:
/// each layer takes any subset of its open cells.
struct FreeSearch<'a, V> {
    num_colors: usize,
    counts: &'a [u32],
    layers: &'a [ColorSet],
    faces: BTreeSet<Face>,
    meter: &'a mut Meter,
    visit: &'a mut V,
}

impl<V: FnMut(ColoredComplex) -> ControlFlow<()>> FreeSearch<'_, V> {
    fn layer(&mut self, li: usize) -> Result<(), Stop> {
        let Some(&colors) = self.layers.get(li) else {
            let c = ColoredComplex::from_valid_faces(self.num_colors, self.faces.clone());
            return match (self.visit)(c) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Stop::Visitor),
            };
        };
        let cells = open_cells(colors, self.counts, &self.faces, self.meter)?;
        self.choose(li, &cells, 0)
    }

    fn choose(&mut self, li: usize, cells: &[Face], j: usize) -> Result<(), Stop> {
        let Some(cell) = cells.get(j) else {
            return self.layer(li + 1);
        };
        self.meter.charge(1)?;
        self.choose(li, cells, j + 1)?;
        self.faces.insert(cell.clone());
        let r = self.choose(li, cells, j + 1);
        self.faces.remove(cell);
        r
    }
}
