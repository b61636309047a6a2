//! Finite connected 2-complexes with a single 0-skeleton graph, faces
//! attached along closed edge walks.
//!
//! The multiplicity `n_e` of an edge is the number of times face walks
//! traverse it, in either direction. A complex has empty boundary when
//! every edge has `n_e >= 2`; presentation complexes of good
//! presentations are the motivating case.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::presentation::{CohomClass, Presentation};
use crate::snf::{self, IMat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: String,
    /// Index of the presentation generator this edge lies over, when the
    /// complex came from a presentation or one of its covers.
    pub gen: Option<usize>,
}

/// One step of an attaching walk: edge index and direction.
pub type Step = (usize, i8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub faces: Vec<Vec<Step>>,
}

pub type Cochain = Vec<BigRational>;

impl TwoComplex {
    pub fn new(vertices: usize, edges: Vec<Edge>, faces: Vec<Vec<Step>>) -> Result<Self> {
        let x = TwoComplex { vertices, edges, faces };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::Parse("a complex needs at least one vertex".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= self.vertices || e.to >= self.vertices {
                return Err(Error::Parse(format!("edge {i} touches a missing vertex")));
            }
        }
        for (fi, walk) in self.faces.iter().enumerate() {
            for &(e, d) in walk {
                if e >= self.edges.len() {
                    return Err(Error::Parse(format!("face {fi} uses a missing edge")));
                }
                if d != 1 && d != -1 {
                    return Err(Error::Parse(format!("face {fi} has a bad direction")));
                }
            }
            // consecutive steps must chain head to tail, cyclically
            if !walk.is_empty() {
                let ends: Vec<(usize, usize)> = walk
                    .iter()
                    .map(|&(e, d)| {
                        let edge = &self.edges[e];
                        if d == 1 {
                            (edge.from, edge.to)
                        } else {
                            (edge.to, edge.from)
                        }
                    })
                    .collect();
                for i in 0..ends.len() {
                    let next = (i + 1) % ends.len();
                    if ends[i].1 != ends[next].0 {
                        return Err(Error::Parse(format!(
                            "face {fi} walk breaks between steps {i} and {next}"
                        )));
                    }
                }
            }
        }
        // connectivity over the 1-skeleton
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, e.from);
            let b = find(&mut parent, e.to);
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        for v in 1..self.vertices {
            if find(&mut parent, v) != root {
                return Err(Error::Disconnected);
            }
        }
        Ok(())
    }

    /// Wedge of loops with one 2-cell per relator.
    pub fn from_presentation(p: &Presentation) -> Self {
        let edges = p
            .gens
            .iter()
            .enumerate()
            .map(|(i, name)| Edge { from: 0, to: 0, label: name.clone(), gen: Some(i) })
            .collect();
        let faces = p
            .rels
            .iter()
            .map(|r| r.letters.iter().map(|l| (l.gen, if l.inv { -1 } else { 1 })).collect())
            .collect();
        TwoComplex { vertices: 1, edges, faces }
    }

    pub fn edge_multiplicities(&self) -> Vec<usize> {
        let mut n = vec![0usize; self.edges.len()];
        for walk in &self.faces {
            for &(e, _) in walk {
                n[e] += 1;
            }
        }
        n
    }

    pub fn is_boundary_empty(&self) -> bool {
        self.edge_multiplicities().iter().all(|&n| n >= 2)
    }

    pub fn boundary_empty_check(&self) -> Result<()> {
        let n = self.edge_multiplicities();
        for (i, &c) in n.iter().enumerate() {
            if c < 2 {
                return Err(Error::BoundaryNotEmpty(self.edges[i].label.clone(), c));
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// BFS spanning tree from vertex 0, neighbors visited in edge order.
    /// Returns `in_tree` flags for the edges.
    pub fn spanning_tree(&self) -> Vec<bool> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices]; // (edge, other)
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.from].push((i, e.to));
            if e.from != e.to {
                adj[e.to].push((i, e.from));
            }
        }
        for a in &mut adj {
            a.sort();
        }
        let mut in_tree = vec![false; self.edges.len()];
        let mut seen = vec![false; self.vertices];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
        in_tree
    }

    /// Vertex potentials measured along the spanning tree: `h(root) = 0`
    /// and `h` grows by the cochain value along tree edges.
    fn tree_potentials(&self, k: &Cochain) -> Vec<BigRational> {
        let in_tree = self.spanning_tree();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices];
        for (i, e) in self.edges.iter().enumerate() {
            if in_tree[i] {
                adj[e.from].push((i, e.to));
                adj[e.to].push((i, e.from));
            }
        }
        let mut h = vec![BigRational::zero(); self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &(ei, w) in &adj[v] {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                let e = &self.edges[ei];
                h[w] = if e.from == v && e.to == w {
                    h[v].clone() + &k[ei]
                } else {
                    h[v].clone() - &k[ei]
                };
                queue.push_back(w);
            }
        }
        h
    }

    /// Signed sum of a cochain around each face walk.
    pub fn face_sums(&self, k: &Cochain) -> Vec<BigRational> {
        self.faces
            .iter()
            .map(|walk| {
                let mut s = BigRational::zero();
                for &(e, d) in walk {
                    if d == 1 {
                        s += &k[e];
                    } else {
                        s -= &k[e];
                    }
                }
                s
            })
            .collect()
    }

    pub fn is_cocycle(&self, k: &Cochain) -> bool {
        self.face_sums(k).iter().all(|s| s.is_zero())
    }

    pub fn cocycle_check(&self, k: &Cochain) -> Result<()> {
        for (i, s) in self.face_sums(k).iter().enumerate() {
            if !s.is_zero() {
                return Err(Error::NotACocycle(i));
            }
        }
        Ok(())
    }

    /// `delta f` on edges: value at the head minus value at the tail.
    pub fn coboundary(&self, f: &[BigRational]) -> Cochain {
        self.edges.iter().map(|e| f[e.to].clone() - &f[e.from]).collect()
    }

    /// The edge cochain of a class given on presentation generators:
    /// each edge carries the value of the generator it lies over.
    pub fn class_cochain(&self, phi: &CohomClass) -> Result<Cochain> {
        self.edges
            .iter()
            .map(|e| {
                let g = e.gen.ok_or_else(|| {
                    Error::NotAPresentationComplex(format!(
                        "edge `{}` lies over no generator",
                        e.label
                    ))
                })?;
                Ok(phi.values[g].clone())
            })
            .collect()
    }

    /// A cocycle representing the class and vanishing on the spanning
    /// tree. Errors when the class fails to vanish on some face walk.
    pub fn cocycle_from_class(&self, phi: &CohomClass) -> Result<Cochain> {
        let rep = self.class_cochain(phi)?;
        self.cocycle_check(&rep)?;
        Ok(self.normalize_to_tree(&rep))
    }

    /// Subtract the coboundary of the tree potentials, producing the
    /// cohomologous cocycle that vanishes on the tree.
    pub fn normalize_to_tree(&self, k: &Cochain) -> Cochain {
        let h = self.tree_potentials(k);
        let dh = self.coboundary(&h);
        k.iter().zip(&dh).map(|(a, b)| a - b).collect()
    }

    /// `H_1` with integer coefficients: Betti number and torsion.
    pub fn h1_structure(&self) -> (usize, Vec<BigInt>) {
        let ne = self.edges.len();
        let nf = self.faces.len();
        // d1: vertices x edges
        let mut d1: IMat = vec![vec![BigInt::zero(); ne]; self.vertices];
        for (i, e) in self.edges.iter().enumerate() {
            d1[e.to][i] += 1;
            d1[e.from][i] -= 1;
        }
        // d2: edges x faces
        let mut d2: IMat = vec![vec![BigInt::zero(); nf]; ne];
        for (j, walk) in self.faces.iter().enumerate() {
            for &(e, d) in walk {
                d2[e][j] += d;
            }
        }
        let s1 = snf::smith(&d1);
        let cycle_rank = ne - s1.rank;
        // express the face boundaries in kernel coordinates of d1
        let vd2 = snf::mat_mul(&s1.q_inv, &d2);
        let y: IMat = (s1.rank..ne).map(|r| vd2[r].clone()).collect();
        for r in 0..s1.rank {
            for c in 0..nf {
                debug_assert!(vd2[r][c].is_zero(), "face boundary left the cycle lattice");
            }
        }
        let sy = snf::smith(&y);
        let betti = cycle_rank - sy.rank;
        let torsion: Vec<BigInt> = sy
            .diag
            .iter()
            .filter(|d| !d.is_zero() && d.abs() > BigInt::from(1))
            .cloned()
            .collect();
        (betti, torsion)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices);
        for (i, e) in self.edges.iter().enumerate() {
            out.push_str(&format!("edge {i}: {} {} {}\n", e.from, e.to, e.label));
        }
        for walk in &self.faces {
            let steps: Vec<String> = walk
                .iter()
                .map(|&(e, d)| format!("{}{e}", if d == 1 { "+" } else { "-" }))
                .collect();
            out.push_str(&format!("face: {}\n", steps.join(" ")));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<usize> = None;
        let mut edges: Vec<Edge> = Vec::new();
        let mut faces: Vec<Vec<Step>> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if vertices.is_some() {
                    return Err(Error::Parse("duplicate `vertices:` line".into()));
                }
                vertices = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex count `{rest}`")))?,
                );
            } else if let Some(rest) = line.strip_prefix("edge") {
                let (idx, body) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
                let idx: usize = idx
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge index `{idx}`")))?;
                if idx != edges.len() {
                    return Err(Error::Parse(format!(
                        "edge indices must run 0, 1, ... (got {idx})"
                    )));
                }
                let toks: Vec<&str> = body.split_whitespace().collect();
                if toks.len() != 2 && toks.len() != 3 {
                    return Err(Error::Parse(format!("bad edge line `{line}`")));
                }
                let from = toks[0]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex `{}`", toks[0])))?;
                let to = toks[1]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex `{}`", toks[1])))?;
                let label =
                    toks.get(2).map(|s| s.to_string()).unwrap_or_else(|| format!("e{idx}"));
                edges.push(Edge { from, to, label, gen: None });
            } else if let Some(rest) = line.strip_prefix("face:") {
                let mut walk = Vec::new();
                for tok in rest.split_whitespace() {
                    let (dir, num) = match tok.strip_prefix('-') {
                        Some(n) => (-1i8, n),
                        None => (1i8, tok.strip_prefix('+').unwrap_or(tok)),
                    };
                    let e: usize = num
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad face step `{tok}`")))?;
                    walk.push((e, dir));
                }
                faces.push(walk);
            } else {
                return Err(Error::Parse(format!("unrecognized line `{line}`")));
            }
        }
        let vertices = vertices.ok_or_else(|| Error::Parse("missing `vertices:` line".into()))?;
        // labels must be usable as class keys
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(e.label.clone()) {
                return Err(Error::Parse(format!("duplicate edge label `{}`", e.label)));
            }
        }
        TwoComplex::new(vertices, edges, faces)
    }

    /// Edge cochain from `(label, value)` pairs; unnamed edges get zero.
    pub fn cochain_from_pairs(&self, pairs: &[(String, BigRational)]) -> Result<Cochain> {
        let mut k = vec![BigRational::zero(); self.edges.len()];
        for (label, v) in pairs {
            let i = self
                .edges
                .iter()
                .position(|e| &e.label == label)
                .ok_or_else(|| Error::UnknownGenerator(label.clone()))?;
            k[i] = v.clone();
        }
        Ok(k)
    }
}
