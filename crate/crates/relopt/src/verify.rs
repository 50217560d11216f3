//! Exhaustive corpora of connected `(n, m)`-multigraphs and certification
//! of optimality against them.
//!
//! A multigraph is generated as its sorted edge list over the pair alphabet
//! `(u, v)`, `u <= v`, in lexicographic order. Only lists that are the
//! lexicographic minimum of their relabeling orbit are kept. If a prefix is
//! beaten by a relabeling, every extension is beaten too: the smallest `j`
//! relabeled edges of the extension are elementwise at most the relabeled
//! prefix. So non-minimal prefixes are cut, and each isomorphism class is
//! produced exactly once.

use crate::distillation::{balanced_weightings, catalog};
use crate::graph::{canonical_form_with_cap, is_canonical_labeling, Multigraph};
use crate::reliability::{compare, profile, ComparisonVerdict, EnumOptions, ReliabilityProfile};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_CANDIDATE_BUDGET: usize = 5_000_000;
pub const DEFAULT_SURVIVOR_BUDGET: usize = 100_000;
/// Vertex cap for canonical forms of corpus members; the pruned search is
/// fast on the sparse graphs involved.
const CORPUS_ISO_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub n: usize,
    pub m: usize,
    /// Maximum number of search nodes (prefixes) visited.
    pub candidate_budget: usize,
    /// Maximum number of graphs returned.
    pub survivor_budget: usize,
    pub enum_opts: EnumOptions,
}

impl CorpusSpec {
    pub fn new(n: usize, m: usize) -> Self {
        CorpusSpec {
            n,
            m,
            candidate_budget: DEFAULT_CANDIDATE_BUDGET,
            survivor_budget: DEFAULT_SURVIVOR_BUDGET,
            enum_opts: EnumOptions::default(),
        }
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::NoVertices);
        }
        if self.m + 1 < self.n {
            return Err(Error::Precondition(format!("no connected graph has n = {} and m = {}", self.n, self.m)));
        }
        Ok(())
    }
}

/// A generated corpus together with the work it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub graphs: Vec<Multigraph>,
    pub candidates: usize,
}

struct Generator<'a> {
    spec: &'a CorpusSpec,
    types: Vec<(usize, usize)>,
    visited: &'a AtomicUsize,
    found: &'a AtomicUsize,
}

impl Generator<'_> {
    fn descend(&self, edges: &mut Vec<(usize, usize)>, start: usize, out: &mut Vec<Multigraph>) -> Result<()> {
        if self.visited.fetch_add(1, Ordering::Relaxed) >= self.spec.candidate_budget {
            return Err(Error::BudgetExceeded(format!("more than {} candidate multisets", self.spec.candidate_budget)));
        }
        let g = Multigraph::new(self.spec.n, edges.iter().copied())?;
        if !is_canonical_labeling(&g) {
            return Ok(());
        }
        let remaining = self.spec.m - edges.len();
        if g.component_count() > remaining + 1 {
            return Ok(());
        }
        if remaining == 0 {
            if self.found.fetch_add(1, Ordering::Relaxed) >= self.spec.survivor_budget {
                return Err(Error::BudgetExceeded(format!("more than {} graphs", self.spec.survivor_budget)));
            }
            out.push(g);
            return Ok(());
        }
        for t in start..self.types.len() {
            edges.push(self.types[t]);
            let res = self.descend(edges, t, out);
            edges.pop();
            res?;
        }
        Ok(())
    }
}

/// One labeled representative per isomorphism class of connected
/// multigraphs with `n` vertices and `m` edges, loops allowed, in
/// lexicographic order of edge lists.
pub fn enumerate_connected(spec: &CorpusSpec) -> Result<Corpus> {
    spec.check()?;
    let types: Vec<(usize, usize)> = (0..spec.n).flat_map(|u| (u..spec.n).map(move |v| (u, v))).collect();
    let (visited, found) = (AtomicUsize::new(0), AtomicUsize::new(0));
    let generator = Generator { spec, types, visited: &visited, found: &found };
    let run = || -> Result<Vec<Multigraph>> {
        if spec.m == 0 {
            let mut out = Vec::new();
            generator.descend(&mut Vec::new(), 0, &mut out)?;
            return Ok(out);
        }
        let parts: Vec<Vec<Multigraph>> = (0..generator.types.len())
            .into_par_iter()
            .map(|t| {
                let mut out = Vec::new();
                generator.descend(&mut vec![generator.types[t]], t, &mut out)?;
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(parts.into_iter().flatten().collect())
    };
    let mut graphs = spec.enum_opts.run(run)?;
    graphs.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(Corpus { graphs, candidates: visited.into_inner() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Strictly more reliable than every non-isomorphic member on `(0, 1)`.
    UniquelyOptimal,
    /// Never beaten, but tied with some non-isomorphic member.
    UmrgNotUnique,
    /// Beaten somewhere by some member.
    NotUmrg,
    /// Beaten somewhere, and no member is optimal at every sampled `p`.
    NoUmrgExists,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::UniquelyOptimal => "UNIQUELY_OPTIMAL",
            Verdict::UmrgNotUnique => "UMRG_NOT_UNIQUE",
            Verdict::NotUmrg => "NOT_UMRG",
            Verdict::NoUmrgExists => "NO_UMRG_EXISTS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingPair {
    pub member: Vec<(usize, usize)>,
    /// Isolating intervals `(lo, hi)` of the sign changes of the
    /// difference, as exact rationals.
    pub roots: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    /// The candidate in the corpus labeling.
    pub candidate: Vec<(usize, usize)>,
    pub corpus_size: usize,
    pub candidates_visited: usize,
    /// Members strictly less reliable than the candidate on `(0, 1)`.
    pub dominated: usize,
    /// Non-isomorphic members with the same polynomial.
    pub equal: usize,
    /// Members more reliable somewhere: dominating members plus crossings.
    pub incomparable: usize,
    pub dominating: usize,
    pub crossing_pairs: Vec<CrossingPair>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report fields serialize")
    }
}

/// Probabilities sampled when looking for a member optimal everywhere.
pub fn sample_probabilities() -> Vec<BigRational> {
    [(1, 100), (1, 10), (1, 4), (1, 2), (3, 4), (9, 10), (99, 100)]
        .into_iter()
        .map(|(a, b)| BigRational::new(a.into(), b.into()))
        .collect()
}

fn corpus_profiles(graphs: &[Multigraph], opts: &EnumOptions) -> Result<Vec<ReliabilityProfile>> {
    let inner = EnumOptions { workers: 1, ..*opts };
    opts.run(|| graphs.par_iter().map(|g| profile(g, &inner)).collect())
}

/// Indices of the members maximizing `R(p)`.
fn maximizers(profiles: &[ReliabilityProfile], p: &BigRational) -> Result<Vec<usize>> {
    let values: Vec<BigRational> = profiles.iter().map(|pr| pr.reliability(p)).collect::<Result<_>>()?;
    let best = values.iter().max().cloned();
    Ok(values.iter().enumerate().filter(|(_, v)| Some(*v) == best.as_ref()).map(|(i, _)| i).collect())
}

/// Compares `candidate` with every member of `corpus`, which must hold one
/// graph per isomorphism class and contain the candidate's class.
pub fn verify_against(candidate: &Multigraph, corpus: &Corpus, opts: &EnumOptions) -> Result<VerificationReport> {
    let (n, m) = (candidate.n(), candidate.m());
    if !candidate.is_connected() {
        return Err(Error::Disconnected);
    }
    if corpus.graphs.iter().any(|g| (g.n(), g.m()) != (n, m)) {
        return Err(Error::Precondition("corpus members differ in size from the candidate".into()));
    }
    let code = canonical_form_with_cap(candidate, CORPUS_ISO_CAP)?;
    let mut position = None;
    for (i, g) in corpus.graphs.iter().enumerate() {
        if canonical_form_with_cap(g, CORPUS_ISO_CAP)? == code {
            position = Some(i);
            break;
        }
    }
    let position =
        position.ok_or_else(|| Error::Precondition("the candidate's class is missing from the corpus".into()))?;
    let profiles = corpus_profiles(&corpus.graphs, opts)?;
    let own = &profiles[position];
    let verdicts: Vec<ComparisonVerdict> = opts.run(|| {
        profiles
            .par_iter()
            .enumerate()
            .filter(|(i, _)| *i != position)
            .map(|(_, pr)| compare(own, pr))
            .collect::<Result<_>>()
    })?;
    let others: Vec<usize> = (0..corpus.graphs.len()).filter(|&i| i != position).collect();
    let (mut dominated, mut equal, mut dominating) = (0, 0, 0);
    let mut crossing_pairs = Vec::new();
    for (&i, v) in others.iter().zip(verdicts) {
        match v {
            ComparisonVerdict::ADominates => dominated += 1,
            ComparisonVerdict::Equal => equal += 1,
            ComparisonVerdict::BDominates => dominating += 1,
            ComparisonVerdict::Crossing(roots) => crossing_pairs.push(CrossingPair {
                member: corpus.graphs[i].edges().to_vec(),
                roots: roots.iter().map(|r| (r.lo.to_string(), r.hi.to_string())).collect(),
            }),
        }
    }
    let incomparable = dominating + crossing_pairs.len();
    let verdict = if incomparable == 0 && equal == 0 {
        Verdict::UniquelyOptimal
    } else if incomparable == 0 {
        Verdict::UmrgNotUnique
    } else {
        let mut common: Option<BTreeSet<usize>> = None;
        for p in sample_probabilities() {
            let best: BTreeSet<usize> = maximizers(&profiles, &p)?.into_iter().collect();
            common = Some(match common {
                None => best,
                Some(c) => c.intersection(&best).copied().collect(),
            });
        }
        if common.is_some_and(|c| c.is_empty()) {
            Verdict::NoUmrgExists
        } else {
            Verdict::NotUmrg
        }
    };
    Ok(VerificationReport {
        n,
        m,
        candidate: corpus.graphs[position].edges().to_vec(),
        corpus_size: corpus.graphs.len(),
        candidates_visited: corpus.candidates,
        dominated,
        equal,
        incomparable,
        dominating,
        crossing_pairs,
        verdict,
    })
}

/// Generates the corpus for `spec` and verifies `candidate` against it.
pub fn verify_uniquely_optimal(candidate: &Multigraph, spec: &CorpusSpec) -> Result<VerificationReport> {
    if (candidate.n(), candidate.m()) != (spec.n, spec.m) || !candidate.is_connected() {
        return Err(Error::Precondition(format!("the candidate is not a connected ({}, {})-graph", spec.n, spec.m)));
    }
    let corpus = enumerate_connected(spec)?;
    verify_against(candidate, &corpus, &spec.enum_opts)
}

/// Every corpus member maximizing `R(p)`, for an exact `p` in `[0, 1]`.
pub fn p_optimal_set(spec: &CorpusSpec, p: &BigRational) -> Result<Vec<Multigraph>> {
    let corpus = enumerate_connected(spec)?;
    let profiles = corpus_profiles(&corpus.graphs, &spec.enum_opts)?;
    Ok(maximizers(&profiles, p)?.into_iter().map(|i| corpus.graphs[i].clone()).collect())
}

/// Corpus members with the least `d_2`, as canonical forms.
pub fn d2_minimizers(spec: &CorpusSpec) -> Result<BTreeSet<Vec<u8>>> {
    let corpus = enumerate_connected(spec)?;
    let profiles = corpus_profiles(&corpus.graphs, &spec.enum_opts)?;
    let d2 = |pr: &ReliabilityProfile| pr.d.get(2).cloned().unwrap_or_default();
    let least: BigUint = profiles.iter().map(d2).min().unwrap_or_default();
    corpus
        .graphs
        .iter()
        .zip(&profiles)
        .filter(|(_, pr)| d2(pr) == least)
        .map(|(g, _)| canonical_form_with_cap(g, CORPUS_ISO_CAP))
        .collect()
}

/// Canonical forms of the balanced weak subdivisions with `m` edges of the
/// cubic 3-edge-connected graphs of exceedance `k`.
pub fn balanced_weak_subdivisions(k: usize, m: usize) -> Result<BTreeSet<Vec<u8>>> {
    let cat = catalog(k)?;
    let mut out = BTreeSet::new();
    for member in &cat.members {
        for wd in balanced_weightings(&member.graph, m) {
            out.insert(canonical_form_with_cap(&wd.realize(), CORPUS_ISO_CAP)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use crate::optimal::optimal_graph;
    use crate::reliability::for_each_combination;

    /// Every multiset of pair types, deduplicated by canonical form.
    fn brute_force_count(n: usize, m: usize) -> usize {
        let types: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let t = types.len();
        let mut seen = BTreeSet::new();
        // Multisets of size m over t types as m-subsets of t + m - 1 slots.
        for_each_combination(t + m - 1, m, |slots| {
            let edges = slots.iter().enumerate().map(|(i, &s)| types[s - i]);
            let g = Multigraph::new(n, edges).unwrap();
            if g.is_connected() {
                seen.insert(canonical_form(&g).unwrap());
            }
        });
        seen.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(&CorpusSpec::new(2, 2)).unwrap().graphs.len(), 2);
        assert_eq!(enumerate_connected(&CorpusSpec::new(1, 2)).unwrap().graphs.len(), 1);
        assert_eq!(enumerate_connected(&CorpusSpec::new(3, 3)).unwrap().graphs.len(), 4);
        assert_eq!(enumerate_connected(&CorpusSpec::new(1, 0)).unwrap().graphs.len(), 1);
        assert!(enumerate_connected(&CorpusSpec::new(4, 2)).is_err());
    }

    #[test]
    fn counts_match_brute_force() {
        for (n, m) in [(2, 3), (3, 4), (4, 4), (4, 5), (3, 6), (5, 6)] {
            let corpus = enumerate_connected(&CorpusSpec::new(n, m)).unwrap();
            assert_eq!(corpus.graphs.len(), brute_force_count(n, m), "({n}, {m})");
            let forms: BTreeSet<_> = corpus.graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(forms.len(), corpus.graphs.len());
        }
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let mut spec = CorpusSpec::new(5, 6);
        let one = enumerate_connected(&spec).unwrap();
        spec.enum_opts.workers = 3;
        assert_eq!(enumerate_connected(&spec).unwrap(), one);
    }

    #[test]
    fn budgets_are_enforced() {
        let mut spec = CorpusSpec::new(5, 7);
        spec.candidate_budget = 10;
        assert!(matches!(enumerate_connected(&spec), Err(Error::BudgetExceeded(_))));
        let mut spec = CorpusSpec::new(5, 7);
        spec.survivor_budget = 3;
        assert!(matches!(enumerate_connected(&spec), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn cycle_and_theta_are_uniquely_optimal() {
        let report = verify_uniquely_optimal(&Multigraph::cycle(5), &CorpusSpec::new(5, 5)).unwrap();
        assert_eq!(report.verdict, Verdict::UniquelyOptimal);
        assert_eq!(report.dominated + 1, report.corpus_size);
        let theta = optimal_graph(1, 6).unwrap().graph;
        let report = verify_uniquely_optimal(&theta, &CorpusSpec::new(5, 6)).unwrap();
        assert_eq!(report.verdict, Verdict::UniquelyOptimal);
        assert_eq!(report.to_json()["verdict"], "UNIQUELY_OPTIMAL");
    }

    #[test]
    fn trees_tie_and_path_is_not_unique() {
        let report = verify_uniquely_optimal(&Multigraph::path(4), &CorpusSpec::new(5, 4)).unwrap();
        assert_eq!(report.verdict, Verdict::UmrgNotUnique);
        assert_eq!(report.incomparable, 0);
    }

    #[test]
    fn weak_candidate_is_not_umrg() {
        let bad = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        let report = verify_uniquely_optimal(&bad, &CorpusSpec::new(4, 4)).unwrap();
        assert_eq!(report.verdict, Verdict::NotUmrg);
        assert!(report.dominating > 0);
    }

    #[test]
    fn candidate_must_fit_the_corpus() {
        assert!(verify_uniquely_optimal(&Multigraph::cycle(4), &CorpusSpec::new(5, 5)).is_err());
    }

    #[test]
    fn cycle_is_p_optimal_at_every_sample() {
        let spec = CorpusSpec::new(4, 4);
        for p in sample_probabilities() {
            let best = p_optimal_set(&spec, &p).unwrap();
            assert_eq!(best.len(), 1);
            assert!(crate::graph::is_isomorphic(&best[0], &Multigraph::cycle(4)).unwrap());
        }
    }

    #[test]
    fn d2_minimizers_are_balanced_dipole_subdivisions() {
        for m in 4..=7 {
            let spec = CorpusSpec::new(m - 1, m);
            assert_eq!(d2_minimizers(&spec).unwrap(), balanced_weak_subdivisions(1, m).unwrap(), "m={m}");
        }
    }
}
