//! Abstract crystals, their finite graphs and graph exports.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::weight::Weight;

/// A crystal model: weight, string statistics and Kashiwara operators.
///
/// Indices are `1..=rank` for the classical structure, and `0` for models
/// carrying an affine structure. Implementations panic on indices they do
/// not support.
pub trait Crystal {
    type Element: Clone + Eq + Hash + Ord + Debug;

    fn rank(&self) -> usize;
    fn weight(&self, b: &Self::Element) -> Weight;
    fn phi(&self, b: &Self::Element, l: usize) -> i64;
    fn eps(&self, b: &Self::Element, l: usize) -> i64;
    fn f(&self, b: &Self::Element, l: usize) -> Option<Self::Element>;
    fn e(&self, b: &Self::Element, l: usize) -> Option<Self::Element>;

    /// Whether `b` is a valid element of the underlying set.
    fn contains(&self, _b: &Self::Element) -> bool {
        true
    }
}

/// A finite crystal graph. Edges are `f`-arrows `(source, label, target)`;
/// `e`-arrows are their reverses.
#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    vertices: Vec<E>,
    index: HashMap<E, usize>,
    edges: Vec<(usize, usize, usize)>,
    index_set: Vec<usize>,
    f_adj: HashMap<(usize, usize), usize>,
    e_adj: HashMap<(usize, usize), usize>,
}

impl<E: Clone + Eq + Hash> CrystalGraph<E> {
    /// Assembles a graph without validation; edges are sorted.
    pub fn from_parts(
        vertices: Vec<E>,
        mut edges: Vec<(usize, usize, usize)>,
        index_set: Vec<usize>,
    ) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();
        let mut f_adj = HashMap::new();
        let mut e_adj = HashMap::new();
        for &(s, l, t) in &edges {
            f_adj.entry((s, l)).or_insert(t);
            e_adj.entry((t, l)).or_insert(s);
        }
        CrystalGraph {
            vertices,
            index,
            edges,
            index_set,
            f_adj,
            e_adj,
        }
    }

    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    pub fn index_of(&self, v: &E) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn f_target(&self, v: usize, l: usize) -> Option<usize> {
        self.f_adj.get(&(v, l)).copied()
    }

    pub fn e_target(&self, v: usize, l: usize) -> Option<usize> {
        self.e_adj.get(&(v, l)).copied()
    }

    /// Length of the `e_l`-string above `v`, following graph edges.
    pub fn eps_len(&self, v: usize, l: usize) -> i64 {
        self.walk(v, |u| self.e_target(u, l))
    }

    /// Length of the `f_l`-string below `v`.
    pub fn phi_len(&self, v: usize, l: usize) -> i64 {
        self.walk(v, |u| self.f_target(u, l))
    }

    fn walk(&self, mut v: usize, step: impl Fn(usize) -> Option<usize>) -> i64 {
        let mut k = 0;
        while let Some(u) = step(v) {
            k += 1;
            v = u;
            if k as usize > self.vertices.len() {
                // a cycle; report a length no string can have
                return i64::MAX;
            }
        }
        k
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(s, _, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.vertices.len())
            .filter(|&x| find(&mut parent, x) == x)
            .count()
    }

    /// Restriction to the edges with labels in `labels`.
    pub fn restrict_labels(&self, labels: &[usize]) -> Self {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|(_, l, _)| labels.contains(l))
            .collect();
        CrystalGraph::from_parts(self.vertices.clone(), edges, labels.to_vec())
    }

    /// DOT rendering with a caller-supplied vertex label. Label-0 edges are
    /// dashed.
    pub fn to_dot(&self, label: impl Fn(&E) -> String) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {k} [label=\"{}\"];\n", label(v)));
        }
        for &(s, l, t) in &self.edges {
            if l == 0 {
                out.push_str(&format!("  {s} -> {t} [label=\"{l}\", style=dashed];\n"));
            } else {
                out.push_str(&format!("  {s} -> {t} [label=\"{l}\"];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl<E: Clone + Eq + Hash + Serialize> CrystalGraph<E> {
    /// `{"vertices":[...],"edges":[[src,label,dst],...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct GraphJson<'a, E> {
            vertices: &'a [E],
            edges: &'a [(usize, usize, usize)],
        }
        serde_json::to_string(&GraphJson {
            vertices: &self.vertices,
            edges: &self.edges,
        })
        .expect("graph serialization cannot fail")
    }
}

/// Closure of `seeds` under `f_l` and `e_l` for `l` in `index_set`.
///
/// Vertices are numbered breadth-first; each BFS layer is sorted before
/// numbering, so the result depends only on the inputs.
pub fn build_graph<C: Crystal>(
    crystal: &C,
    index_set: &[usize],
    seeds: &[C::Element],
) -> CrystalGraph<C::Element> {
    let mut index: HashMap<C::Element, usize> = HashMap::new();
    let mut vertices: Vec<C::Element> = Vec::new();

    let mut layer: Vec<C::Element> = seeds.to_vec();
    layer.sort();
    layer.dedup();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for v in layer {
            if index.contains_key(&v) {
                continue;
            }
            index.insert(v.clone(), vertices.len());
            vertices.push(v.clone());
            for &l in index_set {
                for w in [crystal.f(&v, l), crystal.e(&v, l)].into_iter().flatten() {
                    if !index.contains_key(&w) {
                        next.push(w);
                    }
                }
            }
        }
        next.sort();
        next.dedup();
        layer = next;
    }

    let mut edges = Vec::new();
    for (s, v) in vertices.iter().enumerate() {
        for &l in index_set {
            if let Some(w) = crystal.f(v, l) {
                edges.push((s, l, index[&w]));
            }
        }
    }
    CrystalGraph::from_parts(vertices, edges, index_set.to_vec())
}

/// The weight multiset `{wt(b)}` of a graph, as weight -> multiplicity.
pub fn character<C: Crystal>(
    graph: &CrystalGraph<C::Element>,
    crystal: &C,
) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for v in graph.vertices() {
        *out.entry(crystal.weight(v)).or_insert(0) += 1;
    }
    out
}

/// Result of [`rooted_isomorphism`]: the vertex map, or a witness of failure.
pub type RootedMap<A, B> = Result<HashMap<A, B>, String>;

/// Extends `a_root -> b_root` along `f_l`/`e_l` for `l` in `labels`,
/// checking at every step that both sides act alike.
///
/// Succeeds with the map on the component of `a_root` when it is a
/// well-defined injective strict morphism there.
pub fn rooted_isomorphism<A: Crystal, B: Crystal>(
    a: &A,
    a_root: &A::Element,
    b: &B,
    b_root: &B::Element,
    labels: &[usize],
) -> RootedMap<A::Element, B::Element> {
    let mut forward: HashMap<A::Element, B::Element> = HashMap::new();
    let mut backward: HashMap<B::Element, A::Element> = HashMap::new();
    forward.insert(a_root.clone(), b_root.clone());
    backward.insert(b_root.clone(), a_root.clone());
    let mut queue = VecDeque::from([(a_root.clone(), b_root.clone())]);

    while let Some((x, y)) = queue.pop_front() {
        for &l in labels {
            let moves = [("f", a.f(&x, l), b.f(&y, l)), ("e", a.e(&x, l), b.e(&y, l))];
            for (op, xs, ys) in moves {
                match (xs, ys) {
                    (None, None) => {}
                    (Some(x2), Some(y2)) => match (forward.get(&x2), backward.get(&y2)) {
                        (None, None) => {
                            forward.insert(x2.clone(), y2.clone());
                            backward.insert(y2.clone(), x2.clone());
                            queue.push_back((x2, y2));
                        }
                        (Some(img), Some(pre)) if *img == y2 && *pre == x2 => {}
                        _ => {
                            return Err(format!(
                                "{op}_{l} maps {x:?} -> {x2:?} and {y:?} -> {y2:?} inconsistently with earlier assignments"
                            ))
                        }
                    },
                    (xs, ys) => {
                        return Err(format!(
                            "{op}_{l} defined on one side only: {x:?} -> {xs:?}, {y:?} -> {ys:?}"
                        ))
                    }
                }
            }
        }
    }
    Ok(forward)
}
