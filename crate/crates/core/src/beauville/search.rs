//! Structure search: exhaustive over pair orbits for small groups, and
//! seeded random sampling for large ones.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::context::GroupContext;
use super::sigma::{default_sigma_strategy, ExactSigma, SigmaFingerprint};
use super::verify::{find_inverter, verify_unmixed, BeauvilleReport};
use super::{BeauvilleError, BeauvilleStructure, GeneratingPair, SCHEMA_VERSION};
use crate::groups::{Element, RealizedGroup};
use crate::perms::Permutation;
use crate::stabchain::{ClassSet, ClassTable, StabChain};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest group order the exhaustive search accepts.
    pub bound: u64,
    /// Pair orbits (exhaustive) or samples (randomized); 0 means no limit
    /// for the exhaustive search.
    pub budget: u64,
    pub seed: u64,
    /// Worker threads; 0 uses the available parallelism.
    pub workers: usize,
    /// Only look for structures with inner strong-reality witnesses.
    pub strongly_real: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { bound: 10_000, budget: 0, seed: 1, workers: 0, strongly_real: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SearchVerdict {
    Found,
    NoneExists,
    Exhausted,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchStats {
    pub strategy: String,
    pub group_order: String,
    pub classes: Option<usize>,
    pub pair_orbits: u64,
    pub generating_pair_orbits: u64,
    pub distinct_sigmas: u64,
    pub samples: u64,
    /// Whether every generating pair's Σ contains every nontrivial central
    /// element; `None` when the centre is trivial or nothing was enumerated.
    pub central_in_every_sigma: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: SearchVerdict,
    pub structure: Option<BeauvilleStructure>,
    pub report: Option<BeauvilleReport>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "verdict": self.verdict,
            "stats": self.stats,
            "report": self.report.as_ref().map(BeauvilleReport::to_json),
        })
    }
}

pub trait SearchStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn search(&self, group: &RealizedGroup, cfg: &SearchConfig) -> Result<SearchOutcome, BeauvilleError>;
}

pub const SEARCH_STRATEGIES: &[&str] = &["exhaustive", "randomized"];

pub fn search_strategy(name: &str) -> Option<Box<dyn SearchStrategy>> {
    match name {
        "exhaustive" => Some(Box::new(ExhaustiveSearch)),
        "randomized" => Some(Box::new(RandomizedSearch)),
        _ => None,
    }
}

/// Generating pairs up to simultaneous conjugation: `x` runs over class
/// representatives and `y` over orbit representatives of the centralizer
/// of `x`. Σ is computed exactly for each, and any two disjoint Σ-sets give
/// a structure. If none are disjoint, no structure exists.
pub struct ExhaustiveSearch;

struct PairRecord {
    x: usize,
    y: usize,
    sigma: ClassSet,
}

fn centralizer_generators(table: &ClassTable, x: &Permutation, degree: usize) -> Vec<Permutation> {
    let members: Vec<&Permutation> = table.elements().iter().filter(|g| x.compose(g) == g.compose(x)).collect();
    let target = members.len() as u64;
    let mut chain = StabChain::trivial(degree);
    let mut gens = Vec::new();
    for g in members {
        if chain.order_u64() == Some(target) {
            break;
        }
        if chain.add_generator(g) {
            gens.push(g.clone());
        }
    }
    gens
}

/// Generating pairs with first element in class `class`.
fn pairs_for_class(table: &ClassTable, class: usize, degree: usize, order: u64) -> (u64, Vec<PairRecord>) {
    let xi = table.classes()[class].representative;
    let x = table.element(xi);
    let cgens = centralizer_generators(table, x, degree);
    let n = table.len();
    let mut visited = vec![false; n];
    let mut orbits = 0;
    let mut out = Vec::new();
    for yi in 0..n {
        if visited[yi] {
            continue;
        }
        orbits += 1;
        visited[yi] = true;
        let mut stack = vec![yi];
        while let Some(i) = stack.pop() {
            for c in &cgens {
                let j = table.index_of(&table.element(i).conjugate_by(c)).expect("closed");
                if !visited[j] {
                    visited[j] = true;
                    stack.push(j);
                }
            }
        }
        let y = table.element(yi);
        if y.is_identity() {
            continue;
        }
        if StabChain::new(degree, &[x.clone(), y.clone()]).order_u64() != Some(order) {
            continue;
        }
        out.push(PairRecord { x: xi, y: yi, sigma: table.sigma(x, y) });
    }
    (orbits, out)
}

impl SearchStrategy for ExhaustiveSearch {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn search(&self, group: &RealizedGroup, cfg: &SearchConfig) -> Result<SearchOutcome, BeauvilleError> {
        let order = group
            .order_u64()
            .filter(|&o| o <= cfg.bound)
            .ok_or_else(|| BeauvilleError::Bound(format!("|{}| exceeds {}", group.descriptor(), cfg.bound)))?;
        let ctx = GroupContext::with_bound(group, cfg.bound);
        let table = ctx.require_table()?;
        let degree = group.degree();
        let classes: Vec<usize> = (0..table.class_count()).filter(|&c| table.classes()[c].order > 1).collect();
        let run = || -> Vec<(u64, Vec<PairRecord>)> {
            classes.par_iter().map(|&c| pairs_for_class(table, c, degree, order)).collect()
        };
        let per_class = if cfg.workers > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.workers)
                .build()
                .map_err(|e| BeauvilleError::Precondition(e.to_string()))?
                .install(run)
        } else {
            run()
        };
        let mut stats = SearchStats {
            strategy: self.name().into(),
            group_order: order.to_string(),
            classes: Some(table.class_count()),
            ..SearchStats::default()
        };
        let mut records = Vec::new();
        for (orbits, recs) in per_class {
            stats.pair_orbits += orbits;
            records.extend(recs);
        }
        stats.generating_pair_orbits = records.len() as u64;
        if cfg.budget > 0 && stats.pair_orbits > cfg.budget {
            return Ok(SearchOutcome { verdict: SearchVerdict::Exhausted, structure: None, report: None, stats });
        }

        let mut distinct: Vec<ClassSet> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<ClassSet, usize> = HashMap::new();
        for (r, rec) in records.iter().enumerate() {
            let k = *index.entry(rec.sigma.clone()).or_insert_with(|| {
                distinct.push(rec.sigma.clone());
                members.push(Vec::new());
                distinct.len() - 1
            });
            members[k].push(r);
        }
        stats.distinct_sigmas = distinct.len() as u64;
        let central: Vec<usize> =
            table.central_nontrivial().into_iter().map(|i| table.class_of(i)).collect();
        if !central.is_empty() && !distinct.is_empty() {
            stats.central_in_every_sigma = Some(distinct.iter().all(|s| central.iter().all(|&c| s.contains(c))));
        }

        let pair_of = |r: usize| -> Result<GeneratingPair, BeauvilleError> {
            let rec = &records[r];
            Ok(GeneratingPair::new(group.from_perm(table.element(rec.x))?, group.from_perm(table.element(rec.y))?))
        };
        let mut real_cache: HashMap<usize, Option<(usize, Element)>> = HashMap::new();
        let mut real_member = |k: usize| -> Result<Option<(usize, Element)>, BeauvilleError> {
            if let Some(v) = real_cache.get(&k) {
                return Ok(v.clone());
            }
            let mut found = None;
            for &r in &members[k] {
                if let Some(t) = find_inverter(&ctx, &pair_of(r)?)? {
                    found = Some((r, t));
                    break;
                }
            }
            real_cache.insert(k, found.clone());
            Ok(found)
        };

        let mut fallback: Option<(usize, usize)> = None;
        let mut chosen: Option<BeauvilleStructure> = None;
        'outer: for i in 0..distinct.len() {
            for j in i + 1..distinct.len() {
                if !distinct[i].is_disjoint(&distinct[j]) {
                    continue;
                }
                fallback.get_or_insert((members[i][0], members[j][0]));
                if !cfg.strongly_real {
                    break 'outer;
                }
                if let (Some((r1, t1)), Some((r2, t2))) = (real_member(i)?, real_member(j)?) {
                    chosen = Some(BeauvilleStructure {
                        pair1: pair_of(r1)?,
                        pair2: pair_of(r2)?,
                        witnesses: Some((t1, t2)),
                    });
                    break 'outer;
                }
            }
        }
        if chosen.is_none() {
            if let Some((r1, r2)) = fallback {
                chosen = Some(BeauvilleStructure { pair1: pair_of(r1)?, pair2: pair_of(r2)?, witnesses: None });
            }
        }
        match chosen {
            Some(s) => {
                let report = verify_unmixed(&ctx, &s, &ExactSigma, "exhaustive search")?;
                Ok(SearchOutcome { verdict: SearchVerdict::Found, structure: Some(s), report: Some(report), stats })
            }
            None => Ok(SearchOutcome { verdict: SearchVerdict::NoneExists, structure: None, report: None, stats }),
        }
    }
}

/// Samples pairs from a seeded generator. With `strongly_real`, pairs are
/// built as `x = ts`, `y = tu` from random involutions, so `t` inverts both.
pub struct RandomizedSearch;

/// A random involution. When the generators are reflections, a product of
/// mutually commuting random reflections; otherwise `g^(o/2)` for a random
/// `g`, preferring orders with 2-part exactly 2. Powers alone mostly give
/// diagonal involutions in type B, which commute and rarely generate.
pub fn random_involution(group: &RealizedGroup, rng: &mut ChaCha8Rng) -> Element {
    let gens = group.generators();
    let perm = |e: &Element| group.to_perm(e).expect("group element");
    if gens.iter().all(|g| perm(g).order() == 2) {
        let target = rng.gen_range(1..=gens.len());
        let mut kept: Vec<Permutation> = Vec::new();
        let mut product = group.identity();
        for _ in 0..4 * gens.len() {
            if kept.len() == target {
                break;
            }
            let r = gens[rng.gen_range(0..gens.len())].conj(&group.random_element(rng)).expect("same group");
            let pr = perm(&r);
            if kept.iter().all(|k| *k != pr && k.compose(&pr) == pr.compose(k)) {
                product = product.mul(&r).expect("same group");
                kept.push(pr);
            }
        }
        return product;
    }
    let mut fallback = None;
    for _ in 0..64 {
        let g = group.random_element(rng);
        let o = perm(&g).order();
        if o % 4 == 2 {
            return g.pow((o / 2) as i64);
        }
        if o % 2 == 0 && fallback.is_none() {
            fallback = Some(g.pow((o / 2) as i64));
        }
    }
    fallback.unwrap_or_else(|| gens[0].clone())
}

impl SearchStrategy for RandomizedSearch {
    fn name(&self) -> &'static str {
        "randomized"
    }

    fn search(&self, group: &RealizedGroup, cfg: &SearchConfig) -> Result<SearchOutcome, BeauvilleError> {
        let ctx = GroupContext::new(group);
        let strategy = default_sigma_strategy(&ctx);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut pool: Vec<(GeneratingPair, SigmaFingerprint, Option<Element>)> = Vec::new();
        let mut stats = SearchStats {
            strategy: self.name().into(),
            group_order: group.expected_order().to_string(),
            ..SearchStats::default()
        };
        let budget = if cfg.budget == 0 { 1000 } else { cfg.budget };
        for _ in 0..budget {
            stats.samples += 1;
            let (pair, witness) = if cfg.strongly_real {
                let t = random_involution(group, &mut rng);
                let s = random_involution(group, &mut rng);
                let u = random_involution(group, &mut rng);
                (GeneratingPair::new(t.mul(&s)?, t.mul(&u)?), Some(t))
            } else {
                (GeneratingPair::new(group.random_element(&mut rng), group.random_element(&mut rng)), None)
            };
            if pair.x.is_identity() || pair.y.is_identity() {
                continue;
            }
            if !group.generates_whole(&[pair.x.clone(), pair.y.clone()])? {
                continue;
            }
            stats.generating_pair_orbits += 1;
            let fp = strategy.fingerprint(&ctx, &pair)?;
            for (other, ofp, ow) in &pool {
                let cert = strategy.check_dagger(&ctx, ofp, &fp)?;
                if cert.is_disjoint() {
                    let witnesses = match (ow, &witness) {
                        (Some(a), Some(b)) => Some((a.clone(), b.clone())),
                        _ => None,
                    };
                    let s = BeauvilleStructure { pair1: other.clone(), pair2: pair.clone(), witnesses };
                    let report = verify_unmixed(&ctx, &s, strategy.as_ref(), "randomized search")?;
                    return Ok(SearchOutcome {
                        verdict: SearchVerdict::Found,
                        structure: Some(s),
                        report: Some(report),
                        stats,
                    });
                }
            }
            if pool.len() < 256 {
                pool.push((pair, fp, witness));
            }
        }
        Ok(SearchOutcome { verdict: SearchVerdict::Exhausted, structure: None, report: None, stats })
    }
}
