//! Finite simplicial complexes stored as canonical facet lists.
//!
//! A complex lives on dense vertex ids `1..=n`; the original labels used
//! to build it are kept for reporting. Facets are sorted vertex lists,
//! stored in lexicographic order with non-maximal entries dropped, so two
//! complexes are combinatorially equal iff their facet lists are equal.
//!
//! Two degenerate complexes appear as outputs of other operations: the
//! void complex (no faces at all) and the complex `{∅}` whose only face
//! is the empty face (the link of a facet).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("empty input: a complex needs at least one nonempty facet")]
    EmptyInput,
    #[error("facet {0:?} repeats a vertex")]
    DuplicateVertexInFacet(Vec<u32>),
    #[error("vertex labels must be positive")]
    InvalidVertexLabel,
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<u32>),
    #[error("vertex {0} is not in the complex")]
    VertexNotInComplex(u32),
    #[error("skeleton dimension {0} out of range")]
    BadSkeletonDim(i64),
    #[error("malformed facet file: {0}")]
    Parse(String),
}

/// A single face: strictly increasing dense vertex ids. The empty face is
/// `Face(vec![])`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Face(pub Vec<u32>);

impl Face {
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }
}

/// Canonical facet-list representation of a simplicial complex.
#[derive(Debug, Clone, Serialize)]
pub struct SimplicialComplex {
    facets: Vec<Vec<u32>>,
    n: usize,
    /// `labels[i]` is the original label of dense vertex `i + 1`.
    labels: Vec<u32>,
    #[serde(skip)]
    f_cache: OnceLock<Vec<i64>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the canonical complex generated by `raw_facets`, given in
    /// arbitrary (positive) labels. Facets contained in other facets are
    /// dropped; labels are densified to `1..=n` in increasing label order.
    pub fn build(raw_facets: &[Vec<u32>]) -> Result<Self, ComplexError> {
        if raw_facets.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let mut label_set = BTreeSet::new();
        for facet in raw_facets {
            if facet.is_empty() {
                return Err(ComplexError::EmptyInput);
            }
            let mut seen = BTreeSet::new();
            for &v in facet {
                if v == 0 {
                    return Err(ComplexError::InvalidVertexLabel);
                }
                if !seen.insert(v) {
                    return Err(ComplexError::DuplicateVertexInFacet(facet.clone()));
                }
            }
            label_set.extend(seen);
        }
        let labels: Vec<u32> = label_set.into_iter().collect();
        let dense: BTreeMap<u32, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32 + 1))
            .collect();

        let mut facets: Vec<Vec<u32>> = raw_facets
            .iter()
            .map(|facet| {
                let mut f: Vec<u32> = facet.iter().map(|v| dense[v]).collect();
                f.sort_unstable();
                f
            })
            .collect();
        facets.sort();
        facets.dedup();
        // Drop non-maximal facets.
        let maximal: Vec<Vec<u32>> = facets
            .iter()
            .filter(|f| !facets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();

        Ok(SimplicialComplex {
            n: labels.len(),
            labels,
            facets: maximal,
            f_cache: OnceLock::new(),
        })
    }

    /// The complex `{∅}`: one empty face, no vertices.
    pub fn irrelevant() -> Self {
        SimplicialComplex {
            facets: vec![vec![]],
            n: 0,
            labels: vec![],
            f_cache: OnceLock::new(),
        }
    }

    /// The void complex: no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            facets: vec![],
            n: 0,
            labels: vec![],
            f_cache: OnceLock::new(),
        }
    }

    /// Rebuilds a complex from facets in *parent* labels, remembering the
    /// given labels. Used by subcomplex operations so that link, star and
    /// boundary keep the parent's labelling.
    fn from_labelled_facets(raw: &[Vec<u32>]) -> Self {
        if raw.is_empty() {
            return SimplicialComplex::void();
        }
        if raw.iter().all(|f| f.is_empty()) {
            return SimplicialComplex::irrelevant();
        }
        SimplicialComplex::build(raw).expect("subcomplex facets are valid")
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex whose only face is the empty face.
    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// d = dim + 1; 0 for the void and irrelevant complexes.
    pub fn d(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.d() as i64 - 1
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Original label of a dense vertex id.
    pub fn label_of(&self, v: u32) -> u32 {
        self.labels[(v - 1) as usize]
    }

    /// Facet list written in original labels.
    pub fn facets_by_label(&self) -> Vec<Vec<u32>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&v| self.label_of(v)).collect())
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Face membership; the query's vertex list is sorted before the
    /// subset test, so callers may pass vertices in any order.
    pub fn contains(&self, face: &Face) -> bool {
        if self.is_void() {
            return false;
        }
        let mut verts = face.0.clone();
        verts.sort_unstable();
        self.facets.iter().any(|f| is_subset(&verts, f))
    }

    /// All faces of dimension `k` (k+1 vertices), lexicographically sorted.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Face> {
        if k == -1 {
            return if self.is_void() {
                vec![]
            } else {
                vec![Face(vec![])]
            };
        }
        if k < -1 || k > self.dim() {
            return vec![];
        }
        let size = (k + 1) as usize;
        let mut set = BTreeSet::new();
        for facet in &self.facets {
            if facet.len() >= size {
                for sub in subsets_of_size(facet, size) {
                    set.insert(sub);
                }
            }
        }
        set.into_iter().map(Face).collect()
    }

    /// Every nonempty face of the complex, all dimensions.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for k in 0..=self.dim() {
            out.extend(self.faces_of_dim(k));
        }
        out
    }

    /// f-vector indexed from f_{-1}: entry `i` is `f_{i-1}`. The empty face
    /// counts 1 unless the complex is void.
    pub fn f_vector(&self) -> Vec<i64> {
        self.f_cache
            .get_or_init(|| {
                if self.is_void() {
                    return vec![0];
                }
                let mut f = vec![1i64];
                for k in 0..=self.dim() {
                    f.push(self.faces_of_dim(k).len() as i64);
                }
                f
            })
            .clone()
    }

    /// Σ_{i=-1}^{dim} (-1)^i f_i.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &fi)| if i % 2 == 0 { -fi } else { fi })
            .sum()
    }

    /// lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }. The link of the empty face is
    /// the complex itself; the link of a facet is `{∅}`.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(face) {
            return Err(ComplexError::FaceNotInComplex(face.0.clone()));
        }
        let mut link_facets = Vec::new();
        for facet in &self.facets {
            if is_subset(&face.0, facet) {
                let rest: Vec<u32> = facet
                    .iter()
                    .filter(|v| !face.0.contains(v))
                    .map(|&v| self.label_of(v))
                    .collect();
                link_facets.push(rest);
            }
        }
        Ok(SimplicialComplex::from_labelled_facets(&link_facets))
    }

    /// Closed star of a vertex: the subcomplex generated by the facets
    /// containing it.
    pub fn closed_star(&self, v: u32) -> Result<SimplicialComplex, ComplexError> {
        if v == 0 || v as usize > self.n {
            return Err(ComplexError::VertexNotInComplex(v));
        }
        let star: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| f.binary_search(&v).is_ok())
            .map(|f| f.iter().map(|&w| self.label_of(w)).collect())
            .collect();
        Ok(SimplicialComplex::from_labelled_facets(&star))
    }

    /// Subcomplex of faces of dimension at most `k`.
    pub fn skeleton(&self, k: i64) -> Result<SimplicialComplex, ComplexError> {
        if k < 0 || k > self.dim() {
            return Err(ComplexError::BadSkeletonDim(k));
        }
        let size = (k + 1) as usize;
        let mut gens = Vec::new();
        for facet in &self.facets {
            if facet.len() <= size {
                gens.push(facet.iter().map(|&v| self.label_of(v)).collect());
            } else {
                for sub in subsets_of_size(facet, size) {
                    gens.push(sub.iter().map(|&v| self.label_of(v)).collect());
                }
            }
        }
        Ok(SimplicialComplex::from_labelled_facets(&gens))
    }

    /// Number of connected components of the 1-skeleton; 0 for complexes
    /// without vertices.
    pub fn component_count(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for facet in &self.facets {
            for w in facet.windows(2) {
                let a = find(&mut parent, w[0] as usize - 1);
                let b = find(&mut parent, w[1] as usize - 1);
                parent[a] = b;
            }
        }
        (0..self.n).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Vertex sets of the connected components, as dense ids.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut comp_of = vec![usize::MAX; self.n];
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for facet in &self.facets {
            for i in 0..facet.len() {
                for j in i + 1..facet.len() {
                    adj[facet[i] as usize - 1].push(facet[j]);
                    adj[facet[j] as usize - 1].push(facet[i]);
                }
            }
        }
        let mut count = 0;
        for start in 0..self.n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp_of[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    let wi = w as usize - 1;
                    if comp_of[wi] == usize::MAX {
                        comp_of[wi] = count;
                        stack.push(wi);
                    }
                }
            }
            count += 1;
        }
        let mut comps = vec![Vec::new(); count];
        for v in 0..self.n {
            comps[comp_of[v]].push(v as u32 + 1);
        }
        comps
    }

    /// Subcomplex induced by the facets whose vertices all lie in `verts`
    /// (dense ids). Keeps this complex's original labels.
    pub fn restrict_to(&self, verts: &[u32]) -> SimplicialComplex {
        let set: BTreeSet<u32> = verts.iter().copied().collect();
        let gens: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| f.iter().all(|v| set.contains(v)))
            .map(|f| f.iter().map(|&v| self.label_of(v)).collect())
            .collect();
        SimplicialComplex::from_labelled_facets(&gens)
    }

    /// Returns a copy with every original label shifted by `offset`.
    pub fn shift_labels(&self, offset: u32) -> SimplicialComplex {
        SimplicialComplex {
            facets: self.facets.clone(),
            n: self.n,
            labels: self.labels.iter().map(|&l| l + offset).collect(),
            f_cache: OnceLock::new(),
        }
    }

    /// Parses the `.fct` text format: one facet per line, whitespace
    /// separated positive integers, `#` starts a comment.
    pub fn parse_fct(text: &str) -> Result<SimplicialComplex, ComplexError> {
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let facet: Result<Vec<u32>, _> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| {
                        ComplexError::Parse(format!("line {}: bad vertex {:?}", lineno + 1, tok))
                    })
                })
                .collect();
            raw.push(facet?);
        }
        SimplicialComplex::build(&raw)
    }

    /// Canonical `.fct` writer: dense labels, lexicographic facet order.
    pub fn to_fct(&self) -> String {
        let mut out = String::new();
        for facet in &self.facets {
            let line: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

/// All `size`-element subsets of a sorted slice, in lexicographic order.
pub(crate) fn subsets_of_size(items: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(
        items: &[u32],
        size: usize,
        start: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let needed = size - current.len();
        for i in start..=items.len().saturating_sub(needed) {
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    if size <= items.len() {
        rec(items, size, 0, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::build(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn three_cycle_builds() {
        let c = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(c.n(), 3);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn non_maximal_facets_are_dropped() {
        let c = cx(&[&[1, 2, 3], &[2, 3]]);
        assert_eq!(c.facets(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn octahedron_counts() {
        let c = cx(&[
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
        ]);
        assert_eq!(c.n(), 6);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.facet_count(), 8);
        assert_eq!(c.f_vector(), vec![1, 6, 12, 8]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            SimplicialComplex::build(&[]).unwrap_err(),
            ComplexError::EmptyInput
        );
        assert_eq!(
            SimplicialComplex::build(&[vec![]]).unwrap_err(),
            ComplexError::EmptyInput
        );
        assert!(matches!(
            SimplicialComplex::build(&[vec![1, 1, 2]]).unwrap_err(),
            ComplexError::DuplicateVertexInFacet(_)
        ));
        assert_eq!(
            SimplicialComplex::build(&[vec![0, 1]]).unwrap_err(),
            ComplexError::InvalidVertexLabel
        );
    }

    #[test]
    fn labels_are_densified_and_remembered() {
        let c = cx(&[&[10, 20], &[20, 31]]);
        assert_eq!(c.n(), 3);
        assert_eq!(c.labels(), &[10, 20, 31]);
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(c.facets_by_label(), vec![vec![10, 20], vec![20, 31]]);
    }

    #[test]
    fn tetrahedron_boundary_f_vector() {
        let c = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(c.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(c.reduced_euler(), 1);
    }

    #[test]
    fn link_of_empty_face_is_the_complex() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let l = c.link(&Face(vec![])).unwrap();
        assert_eq!(l, c);
    }

    #[test]
    fn link_of_octahedron_vertex_is_a_square() {
        let c = cx(&[
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
        ]);
        let l = c.link(&Face(vec![1])).unwrap();
        assert_eq!(l.f_vector(), vec![1, 4, 4]);
        assert_eq!(l.dim(), 1);
    }

    #[test]
    fn link_of_facet_is_irrelevant() {
        let c = cx(&[&[1, 2, 3]]);
        let l = c.link(&Face(vec![1, 2, 3])).unwrap();
        assert!(l.is_irrelevant());
        assert_eq!(l.f_vector(), vec![1]);
    }

    #[test]
    fn link_requires_membership() {
        let c = cx(&[&[1, 2], &[2, 3]]);
        assert!(matches!(
            c.link(&Face(vec![1, 3])),
            Err(ComplexError::FaceNotInComplex(_))
        ));
    }

    #[test]
    fn link_of_edge_in_four_simplex_boundary_is_a_circle() {
        // All 4-subsets of five vertices.
        let facets: Vec<Vec<u32>> = (1..=5u32)
            .map(|skip| (1..=5).filter(|&v| v != skip).collect())
            .collect();
        let c = SimplicialComplex::build(&facets).unwrap();
        let l = c.link(&Face(vec![1, 2])).unwrap();
        assert_eq!(l.f_vector(), vec![1, 3, 3]);
        assert_eq!(l.dim(), 1);
    }

    #[test]
    fn membership_accepts_unsorted_queries() {
        let c = cx(&[&[1, 2, 3]]);
        assert!(c.contains(&Face(vec![3, 1])));
        assert!(!c.contains(&Face(vec![3, 4])));
    }

    #[test]
    fn purity() {
        assert!(!cx(&[&[1, 2, 3], &[4, 5]]).is_pure());
        assert!(cx(&[&[1, 2], &[2, 3]]).is_pure());
    }

    #[test]
    fn skeleton_of_triangle() {
        let c = cx(&[&[1, 2, 3]]);
        let s = c.skeleton(1).unwrap();
        assert_eq!(s.f_vector(), vec![1, 3, 3]);
        assert!(matches!(
            c.skeleton(5),
            Err(ComplexError::BadSkeletonDim(5))
        ));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let raw = vec![vec![7, 3, 9], vec![3, 9], vec![9, 11]];
        let once = SimplicialComplex::build(&raw).unwrap();
        let twice = SimplicialComplex::build(once.facets()).unwrap();
        assert_eq!(once.facets(), twice.facets());
    }

    #[test]
    fn components_of_disjoint_pieces() {
        let c = cx(&[&[1, 2], &[3, 4, 5]]);
        assert_eq!(c.component_count(), 2);
        let comps = c.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![1, 2]);
    }

    #[test]
    fn fct_roundtrip() {
        let text = "# a square\n1 2\n2 3\n3 4\n1 4\n";
        let c = SimplicialComplex::parse_fct(text).unwrap();
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
        let rewritten = SimplicialComplex::parse_fct(&c.to_fct()).unwrap();
        assert_eq!(c, rewritten);
    }

    #[test]
    fn fct_rejects_garbage() {
        assert!(matches!(
            SimplicialComplex::parse_fct("1 two 3\n"),
            Err(ComplexError::Parse(_))
        ));
    }
}
