//! Per-poset property checks. Each check returns `Err(detail)` on failure.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::oracle;
use crate::par::Exec;
use crate::polytope::{
    self, bijection_parts, degree_sequence, h_description, order_h_description_all_relations,
    skeleton_with, vertices, Kind, SkeletonGraph,
};
use crate::poset::{ElementSet, Poset, XWitness, LINEAR_EXTENSION_MAX_D};

/// Deliberate corruptions used to confirm the suite catches broken code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Chain-polytope adjacency ignores connectivity: every pair of distinct
    /// antichains becomes an edge.
    ChainEdgeIgnoresConnectivity,
    /// X detection always reports no copy.
    XDetectionBlind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    CoverClosureRoundTrip,
    ConnectivityMatchesUnionFind,
    IdealAntichainBijection,
    MaximalChainsSaturated,
    XDetectionMatchesBruteForce,
    VertexCountEquality,
    EdgeCountEquality,
    BijectionRoundTrip,
    PsiNoMixedOrientation,
    OmegaDisjointness,
    DegreeSequenceIffXFree,
    DegreeBounds,
    OracleEdgeAgreement,
    VolumeIdentity,
    FacetCountIffXFree,
    FacetCoverDescriptionComplete,
}

impl Property {
    pub const ALL: [Property; 16] = [
        Property::CoverClosureRoundTrip,
        Property::ConnectivityMatchesUnionFind,
        Property::IdealAntichainBijection,
        Property::MaximalChainsSaturated,
        Property::XDetectionMatchesBruteForce,
        Property::VertexCountEquality,
        Property::EdgeCountEquality,
        Property::BijectionRoundTrip,
        Property::PsiNoMixedOrientation,
        Property::OmegaDisjointness,
        Property::DegreeSequenceIffXFree,
        Property::DegreeBounds,
        Property::OracleEdgeAgreement,
        Property::VolumeIdentity,
        Property::FacetCountIffXFree,
        Property::FacetCoverDescriptionComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::CoverClosureRoundTrip => "cover_closure_round_trip",
            Property::ConnectivityMatchesUnionFind => "connectivity_matches_union_find",
            Property::IdealAntichainBijection => "ideal_antichain_bijection",
            Property::MaximalChainsSaturated => "maximal_chains_saturated",
            Property::XDetectionMatchesBruteForce => "x_detection_matches_brute_force",
            Property::VertexCountEquality => "vertex_count_equality",
            Property::EdgeCountEquality => "edge_count_equality",
            Property::BijectionRoundTrip => "bijection_round_trip",
            Property::PsiNoMixedOrientation => "psi_no_mixed_orientation",
            Property::OmegaDisjointness => "omega_disjointness",
            Property::DegreeSequenceIffXFree => "degree_sequence_iff_x_free",
            Property::DegreeBounds => "degree_bounds",
            Property::OracleEdgeAgreement => "oracle_edge_agreement",
            Property::VolumeIdentity => "volume_identity",
            Property::FacetCountIffXFree => "facet_count_iff_x_free",
            Property::FacetCoverDescriptionComplete => "facet_cover_description_complete",
        }
    }

    fn needs_oracle(self) -> bool {
        matches!(
            self,
            Property::OracleEdgeAgreement
                | Property::VolumeIdentity
                | Property::FacetCountIffXFree
                | Property::FacetCoverDescriptionComplete
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

/// Largest `d` for subset-exhaustive connectivity cross-checks.
const UNION_FIND_MAX_D: usize = 8;
/// Largest `d` for the five-subset brute-force X scan.
const X_BRUTE_FORCE_MAX_D: usize = 8;

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub oracle: bool,
    pub mutation: Option<Mutation>,
}

/// Facts shared by several checks.
pub struct PosetFacts<'a> {
    pub poset: &'a Poset,
    pub order: SkeletonGraph,
    pub chain: SkeletonGraph,
    pub witness: Option<XWitness>,
}

impl<'a> PosetFacts<'a> {
    pub fn new(p: &'a Poset, mutation: Option<Mutation>) -> PosetFacts<'a> {
        let order = skeleton_with(p, Kind::Order, Exec::Sequential);
        let chain = match mutation {
            Some(Mutation::ChainEdgeIgnoresConnectivity) => SkeletonGraph::from_predicate(
                Kind::Chain,
                p.len(),
                p.enumerate_antichains(),
                Exec::Sequential,
                |a, b| a != b,
            ),
            _ => skeleton_with(p, Kind::Chain, Exec::Sequential),
        };
        let witness = match mutation {
            Some(Mutation::XDetectionBlind) => None,
            _ => p.find_x_subposet(),
        };
        PosetFacts {
            poset: p,
            order,
            chain,
            witness,
        }
    }
}

/// Runs every property on one poset.
pub fn check_poset(p: &Poset, opts: CheckOptions) -> Vec<(Property, Outcome)> {
    check_facts(&PosetFacts::new(p, opts.mutation), opts.oracle)
}

pub fn check_facts(facts: &PosetFacts<'_>, oracle: bool) -> Vec<(Property, Outcome)> {
    Property::ALL
        .iter()
        .map(|&prop| {
            let outcome = if prop.needs_oracle() && !oracle {
                Outcome::Skip
            } else {
                match run(prop, facts) {
                    Some(Ok(())) => Outcome::Pass,
                    Some(Err(detail)) => Outcome::Fail(detail),
                    None => Outcome::Skip,
                }
            };
            (prop, outcome)
        })
        .collect()
}

/// `None` when the property does not apply at this size.
pub fn run(prop: Property, f: &PosetFacts<'_>) -> Option<Result<(), String>> {
    let d = f.poset.len();
    Some(match prop {
        Property::CoverClosureRoundTrip => cover_closure_round_trip(f.poset),
        Property::ConnectivityMatchesUnionFind if d <= UNION_FIND_MAX_D => {
            connectivity_matches_union_find(f.poset)
        }
        Property::ConnectivityMatchesUnionFind => return None,
        Property::IdealAntichainBijection => ideal_antichain_bijection(f.poset),
        Property::MaximalChainsSaturated => maximal_chains_saturated(f.poset),
        Property::XDetectionMatchesBruteForce if d <= X_BRUTE_FORCE_MAX_D => {
            x_detection_matches_brute_force(f)
        }
        Property::XDetectionMatchesBruteForce => return None,
        Property::VertexCountEquality => vertex_count_equality(f),
        Property::EdgeCountEquality => edge_count_equality(f),
        Property::BijectionRoundTrip => bijection_round_trip(f),
        Property::PsiNoMixedOrientation => psi_no_mixed_orientation(f),
        Property::OmegaDisjointness => omega_disjointness(f.poset),
        Property::DegreeSequenceIffXFree => degree_sequence_iff_x_free(f),
        Property::DegreeBounds => degree_bounds(f),
        Property::OracleEdgeAgreement => oracle_edge_agreement(f),
        Property::VolumeIdentity if d <= LINEAR_EXTENSION_MAX_D => volume_identity(f.poset),
        Property::VolumeIdentity => return None,
        Property::FacetCountIffXFree => facet_count_iff_x_free(f),
        Property::FacetCoverDescriptionComplete => facet_cover_description_complete(f.poset),
    })
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn cover_closure_round_trip(p: &Poset) -> Result<(), String> {
    let rebuilt = Poset::from_covers(p.len(), &p.cover_pairs()).map_err(|e| e.to_string())?;
    ensure!(&rebuilt == p, "closure of covers differs from the poset");
    Ok(())
}

fn connectivity_matches_union_find(p: &Poset) -> Result<(), String> {
    let d = p.len();
    for mask in 1u64..(1u64 << d) {
        let s = ElementSet::from_mask(mask);
        let members = s.to_vec();
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            parent[x] = root;
            root
        }
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                if p.comparable(i, j) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let root = find(&mut parent, members[0]);
        let expected = members.iter().all(|&i| find(&mut parent, i) == root);
        let got = p.is_connected_subset(s).map_err(|e| e.to_string())?;
        ensure!(
            got == expected,
            "connectivity of {s}: got {got}, union-find {expected}"
        );
    }
    Ok(())
}

fn ideal_antichain_bijection(p: &Poset) -> Result<(), String> {
    let ideals = p.enumerate_ideals();
    let antichains = p.enumerate_antichains();
    ensure!(
        ideals.len() == antichains.len(),
        "{} ideals vs {} antichains",
        ideals.len(),
        antichains.len()
    );
    let mut maxima: Vec<ElementSet> = ideals.iter().map(|&i| p.max_of(i)).collect();
    for (&ideal, &top) in ideals.iter().zip(&maxima) {
        let back = p.ideal_generated_by(top).map_err(|e| e.to_string())?;
        ensure!(back == ideal, "ideal {ideal} -> max {top} -> {back}");
    }
    maxima.sort_unstable();
    ensure!(
        maxima == antichains,
        "max(I) does not hit every antichain exactly once"
    );
    Ok(())
}

fn maximal_chains_saturated(p: &Poset) -> Result<(), String> {
    let chains = p.maximal_chains();
    for &c in &chains {
        ensure!(p.is_chain(c), "{c} is not a chain");
        let mut elems = c.to_vec();
        elems.sort_by_key(|&i| p.down_set(i).len());
        for w in elems.windows(2) {
            ensure!(
                p.upper_covers(w[0]).contains(w[1]),
                "{c} is not saturated at {} < {}",
                w[0],
                w[1]
            );
        }
        // nothing can extend it
        let extendable = (p.elements() - c)
            .iter()
            .any(|x| c.is_subset(p.comparable_set(x)));
        ensure!(!extendable, "{c} is not maximal");
    }
    let unique: HashSet<_> = chains.iter().collect();
    ensure!(unique.len() == chains.len(), "duplicate maximal chains");
    Ok(())
}

/// Induced copy of X on `[a, b, c, g, h]` in this labeling.
fn is_x_labeling(p: &Poset, l: [usize; 5]) -> bool {
    const LESS: [(usize, usize); 8] = [
        (0, 2),
        (1, 2),
        (2, 3),
        (2, 4),
        (0, 3),
        (0, 4),
        (1, 3),
        (1, 4),
    ];
    (0..5).all(|i| (0..5).all(|j| i == j || p.lt(l[i], l[j]) == LESS.contains(&(i, j))))
}

fn permutations5(items: [usize; 5]) -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut idx = [0usize, 1, 2, 3, 4];
    loop {
        out.push(idx.map(|k| items[k]));
        // next lexicographic permutation
        let Some(i) = (0..4).rev().find(|&i| idx[i] < idx[i + 1]) else {
            break;
        };
        let j = (i + 1..5)
            .rev()
            .find(|&j| idx[j] > idx[i])
            .expect("successor exists");
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    out
}

fn x_detection_matches_brute_force(f: &PosetFacts<'_>) -> Result<(), String> {
    let p = f.poset;
    let d = p.len();
    let mut found = false;
    'outer: for mask in 0u64..(1u64 << d) {
        if mask.count_ones() != 5 {
            continue;
        }
        let five: Vec<usize> = ElementSet::from_mask(mask).to_vec();
        for l in permutations5([five[0], five[1], five[2], five[3], five[4]]) {
            if is_x_labeling(p, l) {
                found = true;
                break 'outer;
            }
        }
    }
    ensure!(
        found == f.witness.is_some(),
        "brute force says X present = {found}, detector says {}",
        f.witness.is_some()
    );
    if let Some(w) = f.witness {
        ensure!(
            is_x_labeling(p, w.elements()),
            "witness {w:?} is not an induced X"
        );
    }
    Ok(())
}

fn vertex_count_equality(f: &PosetFacts<'_>) -> Result<(), String> {
    ensure!(
        f.order.vertex_count() == f.chain.vertex_count(),
        "{} order vertices vs {} chain vertices",
        f.order.vertex_count(),
        f.chain.vertex_count()
    );
    Ok(())
}

fn edge_count_equality(f: &PosetFacts<'_>) -> Result<(), String> {
    ensure!(
        f.order.edge_count() == f.chain.edge_count(),
        "{} order edges vs {} chain edges",
        f.order.edge_count(),
        f.chain.edge_count()
    );
    Ok(())
}

fn bijection_round_trip(f: &PosetFacts<'_>) -> Result<(), String> {
    let p = f.poset;
    let omega = polytope::enumerate_omega(p, Exec::Sequential);
    let psi = polytope::enumerate_psi(p, Exec::Sequential);
    ensure!(
        omega.len() == f.order.edge_count(),
        "|Omega| = {} but the order skeleton has {} edges",
        omega.len(),
        f.order.edge_count()
    );
    ensure!(
        psi.len() == f.chain.edge_count(),
        "|Psi| = {} but the chain skeleton has {} edges",
        psi.len(),
        f.chain.edge_count()
    );
    let mut image = Vec::with_capacity(omega.len());
    for &pair in &omega {
        let mapped = polytope::omega_to_psi(p, pair).map_err(|e| e.to_string())?;
        ensure!(
            mapped.is_valid(p),
            "{pair:?} maps outside Psi to {mapped:?}"
        );
        let back = polytope::psi_to_omega(p, mapped).map_err(|e| e.to_string())?;
        ensure!(back == pair, "{pair:?} -> {mapped:?} -> {back:?}");
        image.push(mapped);
    }
    image.sort_unstable();
    let before = image.len();
    image.dedup();
    ensure!(image.len() == before, "forward map is not injective");
    ensure!(image == psi, "forward image differs from Psi");
    for &pair in &psi {
        let back = polytope::psi_to_omega(p, pair).map_err(|e| e.to_string())?;
        let again = polytope::omega_to_psi(p, back).map_err(|e| e.to_string())?;
        ensure!(again == pair, "{pair:?} -> {back:?} -> {again:?}");
    }
    Ok(())
}

fn psi_no_mixed_orientation(f: &PosetFacts<'_>) -> Result<(), String> {
    let p = f.poset;
    let antichains = p.enumerate_antichains();
    for (k, &a) in antichains.iter().enumerate() {
        for &b in &antichains[k + 1..] {
            if !p.is_connected_subset(a ^ b).unwrap_or(false) {
                continue;
            }
            let a_below_b = a.iter().any(|x| !(p.up_set(x).without(x) & b).is_empty());
            let b_below_a = b.iter().any(|y| !(p.up_set(y).without(y) & a).is_empty());
            ensure!(
                !(a_below_b && b_below_a),
                "edge pair {a}, {b} has comparable cross pairs in both directions"
            );
        }
    }
    Ok(())
}

fn omega_disjointness(p: &Poset) -> Result<(), String> {
    for pair in polytope::enumerate_omega(p, Exec::Sequential) {
        let (min_diff, kept) = bijection_parts(p, pair);
        ensure!(
            min_diff.is_disjoint(kept),
            "min(J\\I) = {min_diff} meets max(I) & max(J) = {kept} for {pair:?}"
        );
    }
    Ok(())
}

fn degree_sequence_iff_x_free(f: &PosetFacts<'_>) -> Result<(), String> {
    let order = degree_sequence(&f.order);
    let chain = degree_sequence(&f.chain);
    let x_free = f.witness.is_none();
    ensure!(
        (order == chain) == x_free,
        "degree sequences equal = {}, x_free = {x_free}: {order:?} vs {chain:?}",
        order == chain
    );
    Ok(())
}

fn degree_bounds(f: &PosetFacts<'_>) -> Result<(), String> {
    let d = f.poset.len();
    let empty = f
        .chain
        .index_of(ElementSet::EMPTY)
        .ok_or("empty antichain missing")?;
    let deg_empty = f.chain.degrees()[empty];
    ensure!(
        deg_empty == d,
        "chain-skeleton origin has degree {deg_empty}, expected {d}"
    );
    let min_order = f.order.degrees().into_iter().min().unwrap_or(0);
    let need = if f.witness.is_some() { d + 1 } else { d };
    ensure!(
        min_order >= need,
        "order-skeleton minimum degree {min_order} below {need}"
    );
    Ok(())
}

fn oracle_edge_agreement(f: &PosetFacts<'_>) -> Result<(), String> {
    for g in [&f.order, &f.chain] {
        let verts = vertices(f.poset, g.kind);
        let geometric =
            oracle::geometric_edges(&verts, Exec::Sequential).map_err(|e| e.to_string())?;
        if geometric != g.edges {
            let comb: HashSet<_> = g.edges.iter().collect();
            let geo: HashSet<_> = geometric.iter().collect();
            let (u, v) = **comb.symmetric_difference(&geo).min().expect("sets differ");
            return Err(format!(
                "{} polytope: pair {} / {} is an edge combinatorially = {}, geometrically = {}",
                g.kind,
                g.vertices[u],
                g.vertices[v],
                comb.contains(&(u, v)),
                geo.contains(&(u, v))
            ));
        }
    }
    Ok(())
}

fn volume_identity(p: &Poset) -> Result<(), String> {
    let d = p.len();
    let e = p.count_linear_extensions().map_err(|e| e.to_string())?;
    let order =
        oracle::normalized_volume(&h_description(p, Kind::Order), d).map_err(|e| e.to_string())?;
    let chain =
        oracle::normalized_volume(&h_description(p, Kind::Chain), d).map_err(|e| e.to_string())?;
    ensure!(
        order == u128::from(e) && chain == u128::from(e),
        "normalized volumes order {order}, chain {chain}, e(P) = {e}"
    );
    Ok(())
}

fn facet_counts(p: &Poset) -> Result<(usize, usize), String> {
    let count = |kind| {
        oracle::count_facets(&vertices(p, kind), &h_description(p, kind), p.len())
            .map_err(|e| e.to_string())
    };
    Ok((count(Kind::Order)?, count(Kind::Chain)?))
}

fn facet_count_iff_x_free(f: &PosetFacts<'_>) -> Result<(), String> {
    let (order, chain) = facet_counts(f.poset)?;
    let x_free = f.witness.is_none();
    ensure!(
        (order == chain) == x_free,
        "facets order {order} vs chain {chain}, x_free = {x_free}"
    );
    Ok(())
}

fn facet_cover_description_complete(p: &Poset) -> Result<(), String> {
    let verts = vertices(p, Kind::Order);
    let covers = oracle::count_facets(&verts, &h_description(p, Kind::Order), p.len())
        .map_err(|e| e.to_string())?;
    let all = oracle::count_facets(&verts, &order_h_description_all_relations(p), p.len())
        .map_err(|e| e.to_string())?;
    ensure!(
        covers == all,
        "cover description gives {covers} facets, full relation list {all}"
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_complete() {
        let perms = permutations5([0, 1, 2, 3, 4]);
        assert_eq!(perms.len(), 120);
        assert_eq!(perms.iter().collect::<HashSet<_>>().len(), 120);
    }

    #[test]
    fn x_passes_everything() {
        let x = Poset::x_poset();
        let opts = CheckOptions {
            oracle: true,
            mutation: None,
        };
        for (prop, outcome) in check_poset(&x, opts) {
            assert_eq!(outcome, Outcome::Pass, "{}", prop.name());
        }
    }

    #[test]
    fn mutations_are_caught() {
        let p = Poset::antichain(2);
        let opts = CheckOptions {
            oracle: true,
            mutation: Some(Mutation::ChainEdgeIgnoresConnectivity),
        };
        let results = check_poset(&p, opts);
        let failed: Vec<_> = results
            .iter()
            .filter(|(_, o)| matches!(o, Outcome::Fail(_)))
            .map(|(prop, _)| *prop)
            .collect();
        assert!(failed.contains(&Property::EdgeCountEquality));
        assert!(failed.contains(&Property::OracleEdgeAgreement));

        let blind = CheckOptions {
            oracle: false,
            mutation: Some(Mutation::XDetectionBlind),
        };
        let results = check_poset(&Poset::x_poset(), blind);
        assert!(results
            .iter()
            .any(|(prop, o)| *prop == Property::DegreeSequenceIffXFree
                && matches!(o, Outcome::Fail(_))));
    }
}
