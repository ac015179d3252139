//! Corpus builders shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::BTreeSet;

use colorshift_core::shift::shift_closure;
use colorshift_core::{ColoredComplex, Face};
use rand::Rng;

/// Lattice paths: every order ideal of the `rows x cols` grid, as the list of
/// row lengths (nonincreasing, each at most `cols`).
pub fn young_diagrams(rows: u32, cols: u32) -> Vec<Vec<u32>> {
    fn go(rows: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() as u32 == rows {
            out.push(prefix.clone());
            return;
        }
        for len in 0..=cap {
            prefix.push(len);
            go(rows, len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Every color-shifted complex over two colors with at most `bound` vertices
/// per color: vertex counts `(a, b)` plus a Young diagram of edges in the
/// `a x b` box.
pub fn shifted_two_color_corpus(bound: u32) -> Vec<ColoredComplex> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for rows in young_diagrams(a, b) {
                let mut gens = vec![Face::empty()];
                gens.extend((1..=a).map(|i| Face::from_pairs(&[(1, i)]).unwrap()));
                gens.extend((1..=b).map(|j| Face::from_pairs(&[(2, j)]).unwrap()));
                for (i, &len) in rows.iter().enumerate() {
                    gens.extend((1..=len).map(|j| Face::from_pairs(&[(1, i as u32 + 1), (2, j)]).unwrap()));
                }
                out.push(shift_closure(2, gens).unwrap());
            }
        }
    }
    out
}

/// A random complex over `num_colors` colors with at most `bound` vertices of
/// each color: all vertices present, plus the closure of a few random faces.
pub fn random_complex<R: Rng>(rng: &mut R, num_colors: usize, bound: u32) -> ColoredComplex {
    let counts: Vec<u32> = (0..num_colors).map(|_| rng.gen_range(0..=bound)).collect();
    let mut gens: BTreeSet<Face> = BTreeSet::from([Face::empty()]);
    for (c, &t) in counts.iter().enumerate() {
        gens.extend((1..=t).map(|i| Face::from_pairs(&[(c as u32 + 1, i)]).unwrap()));
    }
    let extra = rng.gen_range(0..=6);
    for _ in 0..extra {
        let mut pairs = Vec::new();
        for (c, &t) in counts.iter().enumerate() {
            if t > 0 && rng.gen_bool(0.6) {
                pairs.push((c as u32 + 1, rng.gen_range(1..=t)));
            }
        }
        gens.insert(Face::from_pairs(&pairs).unwrap());
    }
    ColoredComplex::from_generators(num_colors, gens).unwrap()
}

/// Random color-shifted complex: shift closure of a random complex's faces.
pub fn random_shifted<R: Rng>(rng: &mut R, num_colors: usize, bound: u32) -> ColoredComplex {
    let c = random_complex(rng, num_colors, bound);
    shift_closure(num_colors, c.faces().iter().cloned()).unwrap()
}

/// The definitional test for shift-maximality: dropping `face` leaves a face
/// set that is a complex (possibly with no faces) and is color-shifted.
pub fn removal_keeps_shifted(c: &ColoredComplex, face: &Face) -> bool {
    let mut faces = c.faces().clone();
    faces.remove(face);
    match ColoredComplex::from_faces(c.num_colors(), faces) {
        Ok(rest) => colorshift_core::shift::is_color_shifted(&rest),
        Err(_) => false,
    }
}

/// Faces of `c` counted by cardinality, straight from the face set.
pub fn faces_by_cardinality(c: &ColoredComplex) -> Vec<u64> {
    let mut out = vec![0u64; c.num_colors() + 1];
    for f in c.faces() {
        out[f.len()] += 1;
    }
    out
}
