//! Parking functions of the sink extension, computed by independent routes:
//! the subset definition, a burning sweep, indegree sequences of acyclic
//! partial orientations, and the labels of admissible orientations. The
//! routes are pinned against each other in tests and by the verify command.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{ChipConfig, SimpleGraph, SinkedGraph};
use crate::orient::{
    classify, AdmissibilityClass, ParameterList, PartialOrientation, DEFAULT_EDGE_CAP,
};

/// Cap on the degree-box size enumerated by [`enumerate_parking`].
pub const DEFAULT_BOX_CAP: u128 = 1 << 22;

/// Subset enumeration in [`is_parking`] walks all of `2^n` vertex sets.
pub const SUBSET_VERTEX_CAP: usize = 20;

fn check_len(gs: &SinkedGraph, c: &ChipConfig) -> Result<()> {
    let n = gs.base().vertex_count();
    if c.len() != n {
        return Err(Error::Parse(format!(
            "chip configuration has {} entries, graph has {n} vertices",
            c.len()
        )));
    }
    Ok(())
}

/// The defining test: `c` is a parking function iff every nonempty subset
/// `W` of the non-sink vertices contains some `v_i` with
/// `0 <= c_i < d_W(v_i)`. Brute force over all `2^n - 1` subsets.
pub fn is_parking(gs: &SinkedGraph, c: &ChipConfig) -> Result<bool> {
    check_len(gs, c)?;
    let n = gs.base().vertex_count();
    if n > SUBSET_VERTEX_CAP {
        return Err(Error::EnumerationCap {
            size: 1u128 << n,
            cap: 1u128 << SUBSET_VERTEX_CAP,
        });
    }
    if c.entries().iter().any(|&x| x < 0) {
        return Ok(false);
    }
    for mask in 1u64..(1u64 << n) {
        let mut witnessed = false;
        for i in 1..=n {
            if mask & (1 << (i - 1)) == 0 {
                continue;
            }
            if (c.get(i) as usize) < gs.cut_degree_mask(i, mask) {
                witnessed = true;
                break;
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fast oracle: burn outward from the sink, igniting any vertex whose chip
/// count is less than its number of edges into the burnt set. Agrees with
/// [`is_parking`] on every input (negative entries short-circuit to false,
/// matching the `0 <= c_i` clause of the definition).
pub fn burning_check(gs: &SinkedGraph, c: &ChipConfig) -> Result<bool> {
    check_len(gs, c)?;
    if c.entries().iter().any(|&x| x < 0) {
        return Ok(false);
    }
    let n = gs.base().vertex_count();
    let mut burnt = vec![false; n + 1];
    burnt[0] = true;
    let mut remaining = n;
    let mut progressed = true;
    while progressed && remaining > 0 {
        progressed = false;
        for v in 1..=n {
            if burnt[v] {
                continue;
            }
            // Edges from v into the burnt set: the sink edge plus burnt
            // neighbors in the base graph.
            let into_burnt = 1 + gs
                .base()
                .neighbors(v)
                .into_iter()
                .filter(|&u| burnt[u])
                .count();
            if (c.get(v) as usize) < into_burnt {
                burnt[v] = true;
                remaining -= 1;
                progressed = true;
            }
        }
    }
    Ok(remaining == 0)
}

/// All parking functions, enumerated over the degree box
/// `0 <= c_i <= deg(v_i) - 1` (the singleton subset `W = {v_i}` forces the
/// upper bound, since `d_{v_i}(v_i)` is the full degree in the extension).
pub fn enumerate_parking(gs: &SinkedGraph) -> Result<BTreeSet<ChipConfig>> {
    enumerate_parking_capped(gs, DEFAULT_BOX_CAP)
}

pub fn enumerate_parking_capped(gs: &SinkedGraph, cap: u128) -> Result<BTreeSet<ChipConfig>> {
    let n = gs.base().vertex_count();
    let radix: Vec<i64> = (1..=n).map(|v| gs.degree(v) as i64).collect();
    let size = radix.iter().fold(1u128, |acc, &r| acc.saturating_mul(r as u128));
    if size > cap {
        return Err(Error::EnumerationCap { size, cap });
    }
    let mut out = BTreeSet::new();
    let mut digits = vec![0i64; n];
    loop {
        let c = ChipConfig::new(digits.clone());
        if is_parking(gs, &c)? {
            out.insert(c);
        }
        // Mixed-radix increment.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < radix[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Histogram of parking functions by degree, indexed `0..=g` where `g` is
/// the genus `|E|` of the extension.
pub fn h_vector(gs: &SinkedGraph) -> Result<Vec<u64>> {
    let parking = enumerate_parking(gs)?;
    let mut h = vec![0u64; gs.genus() + 1];
    for c in &parking {
        h[c.degree() as usize] += 1;
    }
    Ok(h)
}

/// `{ indeg(O) : O an acyclic partial orientation of G }`. Equals the
/// parking set of the sink extension.
pub fn acyclic_indeg_set(g: &SimpleGraph) -> Result<BTreeSet<ChipConfig>> {
    acyclic_indeg_set_capped(g, DEFAULT_EDGE_CAP)
}

pub fn acyclic_indeg_set_capped(g: &SimpleGraph, max_edges: usize) -> Result<BTreeSet<ChipConfig>> {
    if g.edge_count() > max_edges {
        return Err(Error::EdgeCap {
            edges: g.edge_count(),
            cap: max_edges,
        });
    }
    let mut out = BTreeSet::new();
    for o in PartialOrientation::all(g) {
        if o.is_acyclic(g) {
            out.insert(o.indegree(g));
        }
    }
    Ok(out)
}

/// Finds some acyclic partial orientation with the given indegree
/// sequence, if one exists.
pub fn acyclic_orientation_with_indeg(
    g: &SimpleGraph,
    c: &ChipConfig,
) -> Result<Option<PartialOrientation>> {
    if g.edge_count() > DEFAULT_EDGE_CAP {
        return Err(Error::EdgeCap {
            edges: g.edge_count(),
            cap: DEFAULT_EDGE_CAP,
        });
    }
    for o in PartialOrientation::all(g) {
        if o.is_acyclic(g) && &o.indegree(g) == c {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// The set of Pak-Stanley labels: indegree sequences of the admissible
/// orientations, duplicates collapsed.
pub fn pak_stanley_labels(g: &SimpleGraph, a: &ParameterList) -> Result<BTreeSet<ChipConfig>> {
    Ok(pak_stanley_label_multiset(g, a)?.into_keys().collect())
}

/// Same labels with region multiplicities, for diagnostics: several
/// regions may share one label.
pub fn pak_stanley_label_multiset(
    g: &SimpleGraph,
    a: &ParameterList,
) -> Result<BTreeMap<ChipConfig, u64>> {
    pak_stanley_label_multiset_capped(g, a, DEFAULT_EDGE_CAP)
}

pub fn pak_stanley_label_multiset_capped(
    g: &SimpleGraph,
    a: &ParameterList,
    max_edges: usize,
) -> Result<BTreeMap<ChipConfig, u64>> {
    if g.edge_count() > max_edges {
        return Err(Error::EdgeCap {
            edges: g.edge_count(),
            cap: max_edges,
        });
    }
    a.validate(g)?;
    let mut out = BTreeMap::new();
    for o in PartialOrientation::all(g) {
        if classify(g, &o, a) == AdmissibilityClass::Admissible {
            *out.entry(o.indegree(g)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Parking functions of `G` with respect to one of its own vertices:
/// shifted indegree sequences `indeg(O) - (1, ..., 1)` of acyclic partial
/// orientations with entry `-1` at the chosen vertex and nonnegative
/// entries elsewhere. Their number is the spanning-tree count of `G`.
pub fn parking_wrt_vertex(g: &SimpleGraph, vertex: usize) -> Result<BTreeSet<ChipConfig>> {
    if vertex < 1 || vertex > g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: vertex,
            n: g.vertex_count(),
        });
    }
    if g.edge_count() > DEFAULT_EDGE_CAP {
        return Err(Error::EdgeCap {
            edges: g.edge_count(),
            cap: DEFAULT_EDGE_CAP,
        });
    }
    let mut out = BTreeSet::new();
    for o in PartialOrientation::all(g) {
        if !o.is_acyclic(g) {
            continue;
        }
        let c = o.indegree(g).minus_ones();
        if c.get(vertex) != -1 {
            continue;
        }
        if (1..=g.vertex_count()).all(|j| j == vertex || c.get(j) >= 0) {
            out.insert(c);
        }
    }
    Ok(out)
}

/// Maximal parking functions together with the acyclic total orientations
/// of the sink extension that realize them. Builds both sides of the
/// bijection `O -> indeg(O) - (1, ..., 1)` independently and checks that
/// it really is one, then returns the maximal set and the orientation
/// count.
pub fn bct_maximal(g: &SimpleGraph) -> Result<(BTreeSet<ChipConfig>, u64)> {
    let gs = SinkedGraph::new(g.clone());
    let parking = enumerate_parking(&gs)?;
    let maximal: BTreeSet<ChipConfig> = parking
        .iter()
        .filter(|c| {
            parking
                .iter()
                .all(|other| *c == other || !c.dominated_by(other))
        })
        .cloned()
        .collect();

    // Total orientations of the extension: base edges plus one sink edge
    // per vertex, each oriented freely.
    let n = g.vertex_count();
    let total_edges = g.edge_count() + n;
    if total_edges >= 26 {
        return Err(Error::EdgeCap {
            edges: total_edges,
            cap: 25,
        });
    }
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(total_edges);
    let mut images = BTreeSet::new();
    let mut count = 0u64;
    for mask in 0u64..(1u64 << total_edges) {
        arcs.clear();
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            if mask & (1 << k) == 0 {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
        for i in 1..=n {
            if mask & (1 << (g.edge_count() + i - 1)) == 0 {
                arcs.push((0, i));
            } else {
                arcs.push((i, 0));
            }
        }
        if !unique_source_is_sink(n, &arcs) || !arcs_acyclic(n, &arcs) {
            continue;
        }
        count += 1;
        let mut indeg = vec![0i64; n];
        for &(_, to) in &arcs {
            if to >= 1 {
                indeg[to - 1] += 1;
            }
        }
        images.insert(ChipConfig::new(indeg).minus_ones());
    }

    if images != maximal || count != maximal.len() as u64 {
        return Err(Error::InternalMismatch(
            "acyclic total orientations vs maximal parking functions",
        ));
    }
    Ok((maximal, count))
}

/// A source has outdegree equal to its degree; the sink must be the only one.
fn unique_source_is_sink(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut has_incoming = vec![false; n + 1];
    for &(_, to) in arcs {
        has_incoming[to] = true;
    }
    if has_incoming[0] {
        return false;
    }
    (1..=n).all(|v| has_incoming[v])
}

fn arcs_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    let mut color = vec![0u8; n + 1];
    for start in 0..=n {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        color[start] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < out[v].len() {
                let u = out[v][*i];
                *i += 1;
                match color[u] {
                    0 => {
                        color[u] = 1;
                        stack.push((u, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::spanning_tree_count_sinked;
    use crate::orient::{preset, PresetKind};
    use num::BigInt;

    fn p3_parking_set() -> BTreeSet<ChipConfig> {
        // 0, v1, v2, v3, v1+v2, v1+v3, 2v2, v2+v3
        [
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
        ]
        .into_iter()
        .map(ChipConfig::new)
        .collect()
    }

    #[test]
    fn parking_definition_examples() {
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        assert!(is_parking(&p3s, &ChipConfig::new(vec![0, 2, 0])).unwrap());
        assert!(!is_parking(&p3s, &ChipConfig::new(vec![1, 1, 1])).unwrap());
        assert!(is_parking(&p3s, &ChipConfig::zero(3)).unwrap());
        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        assert!(!is_parking(&k3s, &ChipConfig::new(vec![1, 1, 1])).unwrap());
        assert!(!is_parking(&k3s, &ChipConfig::new(vec![-1, 0, 0])).unwrap());
    }

    #[test]
    fn burning_matches_definition_on_the_box_and_beyond() {
        for g in [
            SimpleGraph::path(3),
            SimpleGraph::complete(3),
            SimpleGraph::cycle(4),
            SimpleGraph::complete(4),
        ] {
            let gs = SinkedGraph::new(g);
            let n = gs.base().vertex_count();
            // One step beyond the degree box in every coordinate, plus a
            // negative fringe.
            let radix: Vec<i64> = (1..=n).map(|v| gs.degree(v) as i64 + 2).collect();
            let mut digits = vec![-1i64; n];
            loop {
                let c = ChipConfig::new(digits.clone());
                assert_eq!(
                    is_parking(&gs, &c).unwrap(),
                    burning_check(&gs, &c).unwrap(),
                    "disagreement at {c}"
                );
                let mut i = 0;
                loop {
                    if i == n {
                        return;
                    }
                    digits[i] += 1;
                    if digits[i] < radix[i] {
                        break;
                    }
                    digits[i] = -1;
                    i += 1;
                }
            }
        }
    }

    #[test]
    fn enumerate_matches_known_sets() {
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        assert_eq!(enumerate_parking(&p3s).unwrap(), p3_parking_set());

        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        let parking = enumerate_parking(&k3s).unwrap();
        assert_eq!(parking.len(), 16);
        assert_eq!(
            BigInt::from(parking.len()),
            spanning_tree_count_sinked(&k3s)
        );

        let single = SinkedGraph::new(SimpleGraph::new(1, &[]).unwrap());
        let parking = enumerate_parking(&single).unwrap();
        assert_eq!(parking.len(), 1);
        assert!(parking.contains(&ChipConfig::zero(1)));
    }

    #[test]
    fn h_vectors() {
        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        assert_eq!(h_vector(&k3s).unwrap(), vec![1, 3, 6, 6]);
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        assert_eq!(h_vector(&p3s).unwrap(), vec![1, 3, 4]);
        let single = SinkedGraph::new(SimpleGraph::new(1, &[]).unwrap());
        assert_eq!(h_vector(&single).unwrap(), vec![1]);
    }

    #[test]
    fn acyclic_indegrees_equal_parking() {
        for g in [
            SimpleGraph::complete(3),
            SimpleGraph::path(3),
            SimpleGraph::cycle(4),
        ] {
            let gs = SinkedGraph::new(g.clone());
            assert_eq!(
                acyclic_indeg_set(&g).unwrap(),
                enumerate_parking(&gs).unwrap()
            );
        }
        let edgeless = SimpleGraph::new(3, &[]).unwrap();
        let set = acyclic_indeg_set(&edgeless).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&ChipConfig::zero(3)));
    }

    #[test]
    fn label_sets_and_multiplicities() {
        let k3 = SimpleGraph::complete(3);
        let shi = preset(&k3, &PresetKind::Shi).unwrap();
        let labels = pak_stanley_labels(&k3, &shi).unwrap();
        assert_eq!(labels.len(), 16);
        let multiset = pak_stanley_label_multiset(&k3, &shi).unwrap();
        assert!(multiset.values().all(|&m| m == 1));

        let semi = preset(&k3, &PresetKind::Semi).unwrap();
        let labels = pak_stanley_labels(&k3, &semi).unwrap();
        assert_eq!(labels.len(), 16);
        let multiset = pak_stanley_label_multiset(&k3, &semi).unwrap();
        assert_eq!(multiset.values().sum::<u64>(), 19);
        for c in [vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]] {
            assert_eq!(multiset[&ChipConfig::new(c)], 2);
        }

        let p3 = SimpleGraph::path(3);
        let semi = preset(&p3, &PresetKind::Semi).unwrap();
        let multiset = pak_stanley_label_multiset(&p3, &semi).unwrap();
        assert_eq!(multiset.len(), 8);
        assert_eq!(multiset.values().sum::<u64>(), 9);
        assert_eq!(multiset[&ChipConfig::new(vec![0, 1, 0])], 2);
        assert_eq!(
            pak_stanley_labels(&p3, &semi).unwrap(),
            p3_parking_set()
        );
    }

    #[test]
    fn parking_wrt_vertex_counts_spanning_trees() {
        let k3 = SimpleGraph::complete(3);
        let set = parking_wrt_vertex(&k3, 1).unwrap();
        let expect: BTreeSet<ChipConfig> = [
            vec![-1, 0, 0],
            vec![-1, 0, 1],
            vec![-1, 1, 0],
        ]
        .into_iter()
        .map(ChipConfig::new)
        .collect();
        assert_eq!(set, expect);

        let p3 = SimpleGraph::path(3);
        let set = parking_wrt_vertex(&p3, 2).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&ChipConfig::new(vec![0, -1, 0])));

        let edgeless = SimpleGraph::new(2, &[]).unwrap();
        assert!(parking_wrt_vertex(&edgeless, 1).unwrap().is_empty());
        let one = SimpleGraph::new(1, &[]).unwrap();
        let set = parking_wrt_vertex(&one, 1).unwrap();
        assert!(set.contains(&ChipConfig::new(vec![-1])));
    }

    #[test]
    fn maximal_parking_and_total_orientations() {
        let k3 = SimpleGraph::complete(3);
        let (maximal, count) = bct_maximal(&k3).unwrap();
        assert_eq!(count, 6);
        let expect: BTreeSet<ChipConfig> = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ]
        .into_iter()
        .map(ChipConfig::new)
        .collect();
        assert_eq!(maximal, expect);

        let p3 = SimpleGraph::path(3);
        let (maximal, count) = bct_maximal(&p3).unwrap();
        assert_eq!(count, 4);
        assert!(maximal.iter().all(|c| c.degree() == 2));

        let single = SimpleGraph::new(1, &[]).unwrap();
        let (maximal, count) = bct_maximal(&single).unwrap();
        assert_eq!(count, 1);
        assert!(maximal.contains(&ChipConfig::zero(1)));
    }

    #[test]
    fn downward_closure_of_maximal() {
        let g = SimpleGraph::cycle(4);
        let gs = SinkedGraph::new(g.clone());
        let (maximal, _) = bct_maximal(&g).unwrap();
        for top in &maximal {
            // Walk the full box below each maximal element.
            let n = top.len();
            let mut digits = vec![0i64; n];
            loop {
                let c = ChipConfig::new(digits.clone());
                assert!(is_parking(&gs, &c).unwrap());
                let mut i = 0;
                loop {
                    if i == n {
                        return;
                    }
                    digits[i] += 1;
                    if digits[i] <= top.entries()[i] {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
            }
        }
    }
}
