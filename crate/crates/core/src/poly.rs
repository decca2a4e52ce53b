//! Tutte polynomial by deletion-contraction, the characteristic polynomial
//! of a generic arrangement, reliability, and the closed forms for cycle
//! graphs. Each quantity with two natural computation routes is computed
//! both ways; a disagreement is reported as an error, never swallowed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{component_count, Multigraph, SimpleGraph};

/// Default edge cap for deletion-contraction.
pub const DEFAULT_TUTTE_CAP: usize = 18;

/// Leaf budget for the canonical-labeling search; graphs that exceed it
/// simply skip the memo table.
const CANON_LEAF_BUDGET: usize = 50_000;

/// Bivariate polynomial with exact integer coefficients, indexed by
/// `(x_power, y_power)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::term(0, 0, BigInt::one())
    }

    pub fn x() -> Self {
        BiPoly::term(1, 0, BigInt::one())
    }

    pub fn y() -> Self {
        BiPoly::term(0, 1, BigInt::one())
    }

    pub fn term(xp: u32, yp: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((xp, yp), coeff);
        }
        BiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, xp: u32, yp: u32) -> BigInt {
        self.terms.get(&(xp, yp)).cloned().unwrap_or_default()
    }

    pub fn add_assign(&mut self, other: &BiPoly) {
        for (&k, v) in &other.terms {
            let entry = self.terms.entry(k).or_default();
            *entry += v;
            if entry.is_zero() {
                self.terms.remove(&k);
            }
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &other.terms {
                let k = (ax + bx, ay + by);
                let entry = out.terms.entry(k).or_default();
                *entry += ac * bc;
                if entry.is_zero() {
                    out.terms.remove(&k);
                }
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at rational arguments.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut out = BigRational::zero();
        for (&(xp, yp), c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for _ in 0..xp {
                term *= x;
            }
            for _ in 0..yp {
                term *= y;
            }
            out += term;
        }
        out
    }

    /// Swaps the two variables, as duality does.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(xp, yp), c)| ((yp, xp), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a univariate polynomial for `x` and a rational for `y`.
    pub fn substitute(&self, x: &UniPoly, y: &BigRational) -> UniPoly {
        let max_xp = self.terms.keys().map(|&(xp, _)| xp).max().unwrap_or(0);
        let mut x_powers = Vec::with_capacity(max_xp as usize + 1);
        x_powers.push(UniPoly::constant(BigRational::one()));
        for k in 1..=max_xp as usize {
            x_powers.push(x_powers[k - 1].mul(x));
        }
        let mut out = UniPoly::zero();
        for (&(xp, yp), c) in &self.terms {
            let mut scale = BigRational::from_integer(c.clone());
            for _ in 0..yp {
                scale *= y;
            }
            out.add_assign(&x_powers[xp as usize].scale(&scale));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first, then higher x power.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(xp, yp)| (std::cmp::Reverse(xp + yp), std::cmp::Reverse(xp)));
        let mut first = true;
        for &&(xp, yp) in &keys {
            let c = &self.terms[&(xp, yp)];
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if !mag.is_one() || (xp == 0 && yp == 0) {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (name, p) in [("x", xp), ("y", yp)] {
                if p == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                if p == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{p}")?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}

/// Univariate polynomial in `t` with exact rational coefficients,
/// `coeffs[k]` the coefficient of `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        UniPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_assign(&mut self, other: &UniPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly { coeffs }.trimmed()
    }

    pub fn scale(&self, s: &BigRational) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
        .trimmed()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut out = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * t + c;
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_str = crate::graph::ratio_to_string(&mag);
            if k == 0 {
                write!(f, "{mag_str}")?;
            } else {
                if mag_str != "1" {
                    write!(f, "{mag_str}*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Compact multigraph used inside the recursion: vertex count plus sorted
/// edge multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mg {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Mg {
    fn from_multigraph(mg: &Multigraph) -> Self {
        Mg {
            n: mg.vertex_count(),
            edges: mg.edges().iter().map(|&(a, b)| (a - 1, b - 1)).collect(),
        }
    }

    fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    fn is_bridge(&self, u: usize, v: usize) -> bool {
        if self.multiplicity(u, v) != 1 {
            return false;
        }
        // Does u still reach v without the edge?
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        let key = (u.min(v), u.max(v));
        let mut skipped = false;
        for &(a, b) in &self.edges {
            if !skipped && (a, b) == key {
                skipped = true;
                continue;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return false;
            }
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        true
    }

    fn delete_edge(&self, idx: usize) -> Mg {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Mg { n: self.n, edges }
    }

    /// Contracts the non-loop edge at `idx`, merging the larger endpoint
    /// into the smaller; parallel copies become loops.
    fn contract_edge(&self, idx: usize) -> Mg {
        let (u, v) = self.edges[idx];
        let (keep, gone) = (u.min(v), u.max(v));
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let map = |x: usize| {
                let x = if x == gone { keep } else { x };
                if x > gone {
                    x - 1
                } else {
                    x
                }
            };
            let (a, b) = (map(a), map(b));
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        Mg {
            n: self.n - 1,
            edges,
        }
    }
}

/// Canonical key for the memo table: isolated vertices dropped, vertices
/// relabeled by an individualization-refinement search for the
/// lexicographically least edge multiset. Returns `None` when the search
/// would exceed its budget; such graphs are simply not memoized.
fn canonical_key(mg: &Mg) -> Option<(usize, Vec<(usize, usize)>)> {
    // Compact away isolated vertices; they carry no Tutte information.
    let mut used = vec![false; mg.n];
    for &(a, b) in &mg.edges {
        used[a] = true;
        used[b] = true;
    }
    let mut remap = vec![usize::MAX; mg.n];
    let mut m = 0;
    for v in 0..mg.n {
        if used[v] {
            remap[v] = m;
            m += 1;
        }
    }
    let edges: Vec<(usize, usize)> = mg
        .edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (remap[a], remap[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    if m == 0 {
        return Some((0, Vec::new()));
    }

    let mut search = CanonSearch {
        n: m,
        edges,
        best: None,
        leaves: 0,
    };
    let initial = search.refine(vec![0; m]);
    search.descend(initial)?;
    let best = search.best.take()?;
    Some((m, best))
}

struct CanonSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    best: Option<Vec<(usize, usize)>>,
    leaves: usize,
}

impl CanonSearch {
    /// Color refinement: a vertex's signature is its current color, its
    /// loop count, and the multiset of (neighbor color, multiplicity)
    /// pairs. Iterates to a fixpoint and returns ranked colors.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        loop {
            let mut sigs: Vec<(usize, usize, Vec<usize>)> = (0..self.n)
                .map(|v| (colors[v], 0usize, Vec::new()))
                .collect();
            for &(a, b) in &self.edges {
                if a == b {
                    sigs[a].1 += 1;
                } else {
                    sigs[a].2.push(colors[b]);
                    sigs[b].2.push(colors[a]);
                }
            }
            for s in &mut sigs {
                s.2.sort_unstable();
            }
            let mut sorted: Vec<&(usize, usize, Vec<usize>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            let next: Vec<usize> = (0..self.n)
                .map(|v| sorted.binary_search(&&sigs[v]).unwrap())
                .collect();
            if next == colors {
                return colors;
            }
            colors = next;
        }
    }

    /// Individualization-refinement over the first non-singleton class.
    /// Returns `None` on budget exhaustion.
    fn descend(&mut self, colors: Vec<usize>) -> Option<()> {
        // Find the smallest color whose class has more than one vertex.
        let mut class_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            class_of.entry(c).or_default().push(v);
        }
        let target = class_of.values().find(|vs| vs.len() > 1).cloned();
        match target {
            None => {
                self.leaves += 1;
                if self.leaves > CANON_LEAF_BUDGET {
                    return None;
                }
                // Discrete coloring: colors are a permutation; relabel.
                let mut key: Vec<(usize, usize)> = self
                    .edges
                    .iter()
                    .map(|&(a, b)| {
                        let (a, b) = (colors[a], colors[b]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                key.sort_unstable();
                if self.best.as_ref().map_or(true, |b| key < *b) {
                    self.best = Some(key);
                }
                Some(())
            }
            Some(class) => {
                for v in class {
                    let mut next = colors.clone();
                    // Pull v out into its own fresh color.
                    next[v] = self.n;
                    let next = self.refine(next);
                    self.descend(next)?;
                }
                Some(())
            }
        }
    }
}

/// Tutte polynomial of a multigraph by deletion-contraction with loop and
/// bridge base cases, memoized on the canonical key.
pub fn tutte(mg: &Multigraph) -> Result<BiPoly> {
    tutte_capped(mg, DEFAULT_TUTTE_CAP)
}

pub fn tutte_capped(mg: &Multigraph, max_edges: usize) -> Result<BiPoly> {
    if mg.edge_count() > max_edges {
        return Err(Error::EdgeCap {
            edges: mg.edge_count(),
            cap: max_edges,
        });
    }
    let mut memo: HashMap<(usize, Vec<(usize, usize)>), BiPoly> = HashMap::new();
    Ok(tutte_rec(&Mg::from_multigraph(mg), &mut memo))
}

/// Tutte polynomial of a simple graph.
pub fn tutte_simple(g: &SimpleGraph) -> Result<BiPoly> {
    tutte(&Multigraph::from(g))
}

fn tutte_rec(mg: &Mg, memo: &mut HashMap<(usize, Vec<(usize, usize)>), BiPoly>) -> BiPoly {
    if mg.edges.is_empty() {
        return BiPoly::one();
    }
    let key = canonical_key(mg);
    if let Some(k) = &key {
        if let Some(hit) = memo.get(k) {
            return hit.clone();
        }
    }
    let (u, v) = mg.edges[0];
    let result = if u == v {
        BiPoly::y().mul(&tutte_rec(&mg.delete_edge(0), memo))
    } else if mg.is_bridge(u, v) {
        BiPoly::x().mul(&tutte_rec(&mg.contract_edge(0), memo))
    } else {
        let mut sum = tutte_rec(&mg.delete_edge(0), memo);
        sum.add_assign(&tutte_rec(&mg.contract_edge(0), memo));
        sum
    };
    if let Some(k) = key {
        memo.insert(k, result.clone());
    }
    result
}

/// Independent route: the corank-nullity expansion
/// `sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`.
pub fn tutte_corank_nullity(mg: &Multigraph) -> Result<BiPoly> {
    let m = mg.edge_count();
    if m > 20 {
        return Err(Error::EdgeCap { edges: m, cap: 20 });
    }
    let n = mg.vertex_count();
    let rank = |edges: &[(usize, usize)]| n - component_count(n, edges);
    let full_rank = rank(mg.edges());
    let x1 = {
        let mut p = BiPoly::x();
        p.add_assign(&BiPoly::term(0, 0, -BigInt::one()));
        p
    };
    let y1 = {
        let mut p = BiPoly::y();
        p.add_assign(&BiPoly::term(0, 0, -BigInt::one()));
        p
    };
    let x1_pows: Vec<BiPoly> = (0..=full_rank as u32).map(|k| x1.pow(k)).collect();
    let y1_pows: Vec<BiPoly> = (0..=m as u32).map(|k| y1.pow(k)).collect();
    let mut out = BiPoly::zero();
    let mut subset = Vec::with_capacity(m);
    for mask in 0u64..(1u64 << m) {
        subset.clear();
        for (i, &e) in mg.edges().iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.push(e);
            }
        }
        let r = rank(&subset);
        out.add_assign(&x1_pows[full_rank - r].mul(&y1_pows[subset.len() - r]));
    }
    Ok(out)
}

/// Characteristic polynomial of the generic arrangement over `G`, computed
/// both as the signed forest sum `sum over forests F of (-2)^|F| t^(n-|F|)`
/// and by the Tutte substitution `(-2)^(n-1) t T(1 - t/2, 1)`. The two
/// routes must agree exactly.
pub fn char_poly_generic(g: &SimpleGraph) -> Result<UniPoly> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > DEFAULT_TUTTE_CAP {
        return Err(Error::EdgeCap {
            edges: m,
            cap: DEFAULT_TUTTE_CAP,
        });
    }

    // Route 1: enumerate forests (acyclic edge subsets).
    let mut by_forest = UniPoly::zero();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for mask in 0u64..(1u64 << m) {
        let subset: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let size = subset.len();
        if size > n {
            continue;
        }
        // Acyclic iff the subset has full rank for its size.
        if n - component_count(n, &subset) == size {
            let sign = BigInt::from(-2i32).pow(size as u32);
            coeffs[n - size] += BigRational::from_integer(sign);
        }
    }
    by_forest.add_assign(&UniPoly::from_coeffs(coeffs));

    // Route 2: Tutte substitution `(-2)^r t^(n-r) T(1 - t/2, 1)` with the
    // graph rank r = n - components; for connected graphs this is the
    // familiar `(-2)^(n-1) t` prefactor.
    let rank = n - component_count(n, g.edges());
    let t_poly = tutte_simple(g)?;
    let x_arg = UniPoly::from_coeffs(vec![
        BigRational::one(),
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
    ]);
    let substituted = t_poly.substitute(&x_arg, &BigRational::one());
    let mut shift_coeffs = vec![BigRational::zero(); n - rank];
    shift_coeffs.push(BigRational::one());
    let shift = UniPoly::from_coeffs(shift_coeffs);
    let scale = BigRational::from_integer(BigInt::from(-2i32).pow(rank as u32));
    let by_tutte = substituted.mul(&shift).scale(&scale);

    if by_forest != by_tutte {
        return Err(Error::InternalMismatch("char_poly_generic"));
    }
    Ok(by_forest)
}

/// Region and relatively-bounded counts of a generic arrangement by
/// evaluating the characteristic polynomial at -1 and 1, cross-checked
/// against the direct Tutte evaluations `2^(n-1) T(3/2, 1)` and
/// `2^(n-1) T(1/2, 1)`.
pub fn generic_region_counts(g: &SimpleGraph) -> Result<(BigInt, BigInt)> {
    let chi = char_poly_generic(g)?;
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let one = BigRational::one();
    let r = chi.eval(&minus_one);
    let b = chi.eval(&one);
    let to_abs_int = |v: &BigRational| -> Result<BigInt> {
        if v.denom().is_one() {
            Ok(v.numer().abs())
        } else {
            Err(Error::InternalMismatch("characteristic polynomial evaluation is non-integral"))
        }
    };
    let (r, b) = (to_abs_int(&r)?, to_abs_int(&b)?);

    let t_poly = tutte_simple(g)?;
    let half = |num: i32| BigRational::new(BigInt::from(num), BigInt::from(2));
    let rank = g.vertex_count() - component_count(g.vertex_count(), g.edges());
    let pow2 = BigRational::from_integer(BigInt::from(2u8).pow(rank as u32));
    let r_direct = to_abs_int(&(t_poly.eval(&half(3), &one) * &pow2))?;
    let b_direct = to_abs_int(&(t_poly.eval(&half(1), &one) * &pow2))?;
    if r != r_direct || b != b_direct {
        return Err(Error::InternalMismatch("generic_region_counts"));
    }
    Ok((r, b))
}

/// Probability that removing each edge independently with probability `p`
/// leaves every component of the graph connected. Computed by subset brute
/// force and by the Tutte formula
/// `(1-p)^(|V|-k) p^(|E|-|V|+k) T(1, 1/p)`; both must agree.
pub fn reliability(mg: &Multigraph, p: &BigRational) -> Result<BigRational> {
    let m = mg.edge_count();
    if m > 16 {
        return Err(Error::EdgeCap { edges: m, cap: 16 });
    }
    let n = mg.vertex_count();
    let k = mg.component_count();
    let keep = BigRational::one() - p;

    let mut brute = BigRational::zero();
    let mut keep_pows = vec![BigRational::one()];
    let mut drop_pows = vec![BigRational::one()];
    for i in 1..=m {
        keep_pows.push(&keep_pows[i - 1] * &keep);
        drop_pows.push(&drop_pows[i - 1] * p);
    }
    let mut subset = Vec::with_capacity(m);
    for mask in 0u64..(1u64 << m) {
        subset.clear();
        for (i, &e) in mg.edges().iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.push(e);
            }
        }
        if component_count(n, &subset) == k {
            brute += &keep_pows[subset.len()] * &drop_pows[m - subset.len()];
        }
    }

    let by_formula = if p.is_zero() {
        BigRational::one()
    } else {
        let t_poly = tutte(mg)?;
        let t_val = t_poly.eval(&BigRational::one(), &p.recip());
        let mut out = t_val;
        for _ in 0..(n - k) {
            out *= &keep;
        }
        for _ in 0..(m + k - n) {
            out *= p;
        }
        out
    };
    if brute != by_formula {
        return Err(Error::InternalMismatch("reliability"));
    }
    Ok(brute)
}

/// Cross-checks a planar graph against a user-supplied dual: after an
/// Euler-formula consistency test, the probability that the dual stays
/// connected under edge removal with probability 2/3 must equal the
/// fraction of the `3^|E|` partial orientations that are regions of a
/// generic arrangement.
pub fn dual_check(g: &SimpleGraph, dual: &Multigraph) -> Result<bool> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let consistent =
        dual.edge_count() == m && n + dual.vertex_count() == m + 2;
    if !consistent {
        return Err(Error::EulerInconsistency {
            n,
            edges: m,
            dual_vertices: dual.vertex_count(),
            dual_edges: dual.edge_count(),
        });
    }
    let p = BigRational::new(BigInt::from(2), BigInt::from(3));
    let lhs = reliability(dual, &p)?;
    let (r, _) = generic_region_counts(g)?;
    let rhs = BigRational::new(r, BigInt::from(3).pow(m as u32));
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    Semi,
    Shi,
}

/// Closed-form region counts for the cycle graph `C_n`:
/// `3^n - 2^n - n` regions and `2^n - 1 - n` relatively bounded ones for
/// the Shi parameters; for the all-ones parameters the generic counts
/// `3^n - 2^n` and `2^n - 1`, lowered by `binomial(n, n/2)` when `n` is
/// even.
pub fn cycle_closed_forms(n: usize, kind: CycleKind) -> Result<(BigInt, BigInt)> {
    if n < 3 {
        return Err(Error::Parse(format!(
            "cycle closed forms need n >= 3, got {n}"
        )));
    }
    let three_n = BigInt::from(3u8).pow(n as u32);
    let two_n = BigInt::from(2u8).pow(n as u32);
    let r_gen = &three_n - &two_n;
    let b_gen = &two_n - 1;
    Ok(match kind {
        CycleKind::Shi => (&r_gen - n, &b_gen - n),
        CycleKind::Semi => {
            if n % 2 == 0 {
                let correction = binomial(n, n / 2);
                (&r_gen - &correction, &b_gen - &correction)
            } else {
                (r_gen, b_gen)
            }
        }
    })
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{spanning_tree_count, Multigraph};

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn tutte_known_polynomials() {
        // Cycle graphs: y plus all lower x powers.
        for n in 3..=8usize {
            let t = tutte_simple(&SimpleGraph::cycle(n)).unwrap();
            let mut expect = BiPoly::y();
            for i in 1..n {
                expect.add_assign(&BiPoly::term(i as u32, 0, BigInt::one()));
            }
            assert_eq!(t, expect, "cycle C_{n}");
        }
        // Triangle.
        let t = tutte_simple(&SimpleGraph::complete(3)).unwrap();
        let mut expect = BiPoly::y();
        expect.add_assign(&BiPoly::x());
        expect.add_assign(&BiPoly::term(2, 0, BigInt::one()));
        assert_eq!(t, expect);
        assert_eq!(t.to_string(), "x^2 + x + y");
        // Trees: x^m.
        for n in 2..=6usize {
            let t = tutte_simple(&SimpleGraph::path(n)).unwrap();
            assert_eq!(t, BiPoly::term(n as u32 - 1, 0, BigInt::one()));
        }
        // Cap.
        assert!(matches!(
            tutte_capped(&Multigraph::from(&SimpleGraph::complete(5)), 5),
            Err(Error::EdgeCap { .. })
        ));
    }

    #[test]
    fn tutte_agrees_with_corank_nullity() {
        let graphs = [
            Multigraph::from(&SimpleGraph::complete(4)),
            Multigraph::from(&SimpleGraph::cycle(5)),
            Multigraph::dipole(3),
            Multigraph::new(4, &[(1, 2), (1, 2), (2, 3), (3, 4), (2, 4), (1, 1)]).unwrap(),
            Multigraph::new(4, &[(1, 2), (3, 4)]).unwrap(),
        ];
        for mg in &graphs {
            assert_eq!(
                tutte(mg).unwrap(),
                tutte_corank_nullity(mg).unwrap(),
                "mismatch for {mg:?}"
            );
        }
    }

    #[test]
    fn tutte_at_one_one_counts_spanning_trees() {
        for mg in [
            Multigraph::from(&SimpleGraph::complete(5)),
            Multigraph::from(&SimpleGraph::cycle(6)),
            Multigraph::dipole(4),
        ] {
            let t = tutte(&mg).unwrap();
            let trees = t.eval(&int(1), &int(1));
            assert_eq!(trees, BigRational::from_integer(spanning_tree_count(&mg)));
        }
    }

    #[test]
    fn charpoly_examples() {
        let k3 = SimpleGraph::complete(3);
        let chi = char_poly_generic(&k3).unwrap();
        assert_eq!(
            chi,
            UniPoly::from_coeffs(vec![int(0), int(12), int(-6), int(1)])
        );
        assert_eq!(chi.to_string(), "t^3 - 6*t^2 + 12*t");

        let p3 = SimpleGraph::path(3);
        let chi = char_poly_generic(&p3).unwrap();
        assert_eq!(
            chi,
            UniPoly::from_coeffs(vec![int(0), int(4), int(-4), int(1)])
        );

        let edgeless = SimpleGraph::new(4, &[]).unwrap();
        let chi = char_poly_generic(&edgeless).unwrap();
        assert_eq!(
            chi,
            UniPoly::from_coeffs(vec![int(0), int(0), int(0), int(0), int(1)])
        );
    }

    #[test]
    fn generic_counts() {
        assert_eq!(
            generic_region_counts(&SimpleGraph::complete(3)).unwrap(),
            (BigInt::from(19), BigInt::from(7))
        );
        assert_eq!(
            generic_region_counts(&SimpleGraph::cycle(4)).unwrap(),
            (BigInt::from(65), BigInt::from(15))
        );
        assert_eq!(
            generic_region_counts(&SimpleGraph::path(3)).unwrap(),
            (BigInt::from(9), BigInt::from(1))
        );
    }

    #[test]
    fn reliability_examples() {
        let p = BigRational::new(BigInt::from(2), BigInt::from(3));
        let k3 = Multigraph::from(&SimpleGraph::complete(3));
        assert_eq!(
            reliability(&k3, &p).unwrap(),
            BigRational::new(BigInt::from(7), BigInt::from(27))
        );
        let dipole3 = Multigraph::dipole(3);
        assert_eq!(
            reliability(&dipole3, &p).unwrap(),
            BigRational::new(BigInt::from(19), BigInt::from(27))
        );
        assert_eq!(
            reliability(&k3, &BigRational::zero()).unwrap(),
            BigRational::one()
        );
        // Disconnected input: both components must stay connected.
        let two_edges = Multigraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            reliability(&two_edges, &p).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(9))
        );
    }

    #[test]
    fn duality() {
        assert!(dual_check(&SimpleGraph::cycle(3), &Multigraph::dipole(3)).unwrap());
        assert!(dual_check(&SimpleGraph::cycle(4), &Multigraph::dipole(4)).unwrap());
        let k4 = SimpleGraph::complete(4);
        assert!(dual_check(&k4, &Multigraph::from(&k4)).unwrap());
        assert!(matches!(
            dual_check(&SimpleGraph::cycle(4), &Multigraph::dipole(3)),
            Err(Error::EulerInconsistency { .. })
        ));
        // T_{G*}(y, x) = T_G(x, y) on a supplied planar pair.
        let t_c4 = tutte_simple(&SimpleGraph::cycle(4)).unwrap();
        let t_dipole = tutte(&Multigraph::dipole(4)).unwrap();
        assert_eq!(t_dipole.swap_vars(), t_c4);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            cycle_closed_forms(4, CycleKind::Shi).unwrap(),
            (BigInt::from(61), BigInt::from(11))
        );
        assert_eq!(
            cycle_closed_forms(4, CycleKind::Semi).unwrap(),
            (BigInt::from(59), BigInt::from(9))
        );
        assert_eq!(
            cycle_closed_forms(3, CycleKind::Semi).unwrap(),
            (BigInt::from(19), BigInt::from(7))
        );
        assert!(cycle_closed_forms(2, CycleKind::Shi).is_err());
    }

    #[test]
    fn canonical_key_identifies_isomorphic_relabelings() {
        // The same graph under two labelings must produce one key.
        let a = Mg {
            n: 4,
            edges: vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
        };
        let b = Mg {
            n: 4,
            edges: vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)],
        };
        assert_eq!(canonical_key(&a), canonical_key(&b));
        // And a non-isomorphic graph with the same degree sequence on
        // larger examples: C_6 vs two triangles.
        let c6 = Mg {
            n: 6,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
        };
        let triangles = Mg {
            n: 6,
            edges: vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        };
        assert_ne!(canonical_key(&c6), canonical_key(&triangles));
    }
}
