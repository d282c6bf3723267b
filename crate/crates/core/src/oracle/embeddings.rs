//! Face-oriented embeddings as alternating rotation systems.
//!
//! Edge `e` owns two darts: `2e` at its tail (outgoing) and `2e + 1` at its
//! head (incoming). A rotation system is face-oriented exactly when in- and
//! out-darts alternate around every vertex, so a vertex of half-degree `d`
//! admits `d!(d−1)!` rotations once the cyclic anchor is fixed.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::combinatorics::{all_permutations, factorial};
use crate::{Error, Result};

use super::{check_budget, EulerianDigraph, GenusHistogram, OracleConfig};

/// Cyclic order of darts around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    orders: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(orders: Vec<Vec<usize>>) -> Self {
        RotationSystem { orders }
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    /// Whether in- and out-darts alternate at every vertex.
    pub fn is_alternating(&self) -> bool {
        self.orders.iter().all(|cyc| {
            let len = cyc.len();
            (0..len).all(|i| cyc[i] % 2 != cyc[(i + 1) % len] % 2)
        })
    }

    fn check_fits(&self, d: &EulerianDigraph) -> Result<()> {
        if self.orders.len() != d.vertex_count() {
            return Err(Error::Usage("rotation system has the wrong number of vertices".into()));
        }
        let mut seen = vec![false; 2 * d.edge_count()];
        for (v, cyc) in self.orders.iter().enumerate() {
            for &dart in cyc {
                let (tail, head) = *d
                    .edges()
                    .get(dart / 2)
                    .ok_or_else(|| Error::Usage(format!("dart {dart} out of range")))?;
                let at = if dart % 2 == 0 { tail } else { head };
                if at != v || std::mem::replace(&mut seen[dart], true) {
                    return Err(Error::Usage(format!("dart {dart} misplaced in rotation at vertex {v}")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Usage("rotation system misses some darts".into()));
        }
        Ok(())
    }

    /// Successor of each dart in its vertex rotation.
    pub fn successor(&self, dart_count: usize) -> Vec<usize> {
        let mut next = vec![0; dart_count];
        for cyc in &self.orders {
            write_cycle(cyc, &mut next);
        }
        next
    }
}

fn write_cycle(cyc: &[usize], next: &mut [usize]) {
    for i in 0..cyc.len() {
        next[cyc[i]] = cyc[(i + 1) % cyc.len()];
    }
}

/// Result of tracing the faces of one rotation system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: usize,
    pub genus: usize,
}

/// Traces faces with `φ(d) = ρ(reverse(d))` and checks that every face runs
/// along its edges in a single direction.
pub fn face_trace(d: &EulerianDigraph, rot: &RotationSystem) -> Result<FaceTrace> {
    rot.check_fits(d)?;
    if !rot.is_alternating() {
        return Err(Error::Usage(
            "rotation system does not alternate in- and out-darts".into(),
        ));
    }
    let next = rot.successor(2 * d.edge_count());
    let mut seen = vec![false; next.len()];
    let faces = count_oriented_faces(&next, &mut seen)?;
    Ok(FaceTrace {
        faces,
        genus: genus_from_euler(d, faces)?,
    })
}

fn count_oriented_faces(next: &[usize], seen: &mut [bool]) -> Result<usize> {
    if next.is_empty() {
        // a single isolated vertex bounds one face
        return Ok(1);
    }
    seen.fill(false);
    let mut faces = 0;
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let parity = start & 1;
        let mut dart = start;
        while !seen[dart] {
            if dart & 1 != parity {
                return Err(Error::Consistency(format!(
                    "face through dart {start} is not uniformly oriented"
                )));
            }
            seen[dart] = true;
            dart = next[dart ^ 1];
        }
    }
    Ok(faces)
}

fn genus_from_euler(d: &EulerianDigraph, faces: usize) -> Result<usize> {
    // v − e + f = 2 − 2g
    let twice = 2 + d.edge_count() as i64 - d.vertex_count() as i64 - faces as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Consistency(format!("Euler characteristic gives 2g = {twice}")));
    }
    Ok((twice / 2) as usize)
}

/// `∏_v d_v!(d_v−1)!`, the number of alternating rotation systems.
pub fn total_embeddings(d: &EulerianDigraph) -> BigUint {
    (0..d.vertex_count())
        .map(|v| d.half_degree(v))
        .filter(|&h| h > 0)
        .map(|h| factorial(h) * factorial(h - 1))
        .product()
}

/// All alternating cyclic orders at `v`, anchored at its smallest out-dart.
fn vertex_rotations(d: &EulerianDigraph, v: usize) -> Vec<Vec<usize>> {
    let outs: Vec<usize> = d.out_edges(v).iter().map(|&e| 2 * e).collect();
    let ins: Vec<usize> = d.in_edges(v).iter().map(|&e| 2 * e + 1).collect();
    let h = outs.len();
    if h == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for out_perm in all_permutations(h - 1) {
        for in_perm in all_permutations(h) {
            let mut cyc = Vec::with_capacity(2 * h);
            for slot in 0..h {
                let o = if slot == 0 {
                    outs[0]
                } else {
                    outs[1 + out_perm.apply(slot - 1)]
                };
                cyc.push(o);
                cyc.push(ins[in_perm.apply(slot)]);
            }
            out.push(cyc);
        }
    }
    out
}

/// Genus histogram of every face-oriented embedding of `d`.
pub fn enumerate_embeddings(d: &EulerianDigraph, config: &OracleConfig) -> Result<GenusHistogram> {
    check_budget(&total_embeddings(d), config)?;
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..d.vertex_count()).map(|v| vertex_rotations(d, v)).collect();
    let darts = 2 * d.edge_count();

    let partials: Result<Vec<BTreeMap<usize, u64>>> = per_vertex[0]
        .par_iter()
        .map(|first| {
            let mut next = vec![0; darts];
            let mut seen = vec![false; darts];
            let mut hist = BTreeMap::new();
            write_cycle(first, &mut next);
            let rest = &per_vertex[1..];
            let mut idx = vec![0usize; rest.len()];
            for (choices, &i) in rest.iter().zip(&idx) {
                write_cycle(&choices[i], &mut next);
            }
            loop {
                let faces = count_oriented_faces(&next, &mut seen)?;
                *hist.entry(genus_from_euler(d, faces)?).or_insert(0) += 1;
                // odometer over the remaining vertices
                let mut k = 0;
                loop {
                    if k == rest.len() {
                        return Ok(hist);
                    }
                    idx[k] += 1;
                    if idx[k] < rest[k].len() {
                        write_cycle(&rest[k][idx[k]], &mut next);
                        break;
                    }
                    idx[k] = 0;
                    write_cycle(&rest[k][0], &mut next);
                    k += 1;
                }
            }
        })
        .collect();
    Ok(GenusHistogram::merge_all(partials?))
}
