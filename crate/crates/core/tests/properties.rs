mod oracle;

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::strategy::ValueTree;

use epg::audit::{builtin_checks, run_audit, Counterexample, Value};
use epg::enumerate::{canonical_form, enumerate_semigroups, DedupMode, EnumerationConfig};
use epg::epgraph::enhanced_power_graph;
use epg::format::{parse_table_file, parse_text, to_json_record, to_text, TableFile};
use epg::green::{green_relations, is_completely_regular, GreenRelation};
use epg::props::{chromatic_number, classify, clique_number, is_planar};
use epg::semigroup::{
    all_monogenic_data, exponent, idempotents, maximal_monogenic, monogenic_data, s_f,
};
use epg::CayleyTable;

fn labeled(n: usize) -> &'static [CayleyTable] {
    static CORPUS: OnceLock<Vec<Vec<CayleyTable>>> = OnceLock::new();
    &CORPUS.get_or_init(|| {
        (1..=4)
            .map(|n| enumerate_semigroups(&EnumerationConfig::new(n, DedupMode::Labeled)).unwrap())
            .collect()
    })[n - 1]
}

fn classes_up_to(max: usize) -> Vec<CayleyTable> {
    (1..=max)
        .flat_map(|n| enumerate_semigroups(&EnumerationConfig::new(n, DedupMode::UpToIso)).unwrap())
        .collect()
}

fn table_and_permutation() -> impl Strategy<Value = (CayleyTable, Vec<usize>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            prop::sample::select(labeled(n).to_vec()),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn canonical_form_is_relabeling_invariant((s, p) in table_and_permutation()) {
        let moved = s.relabel(&p);
        prop_assert_eq!(
            oracle::apply(s.cells(), s.order(), &p),
            moved.cells().to_vec()
        );
        for mode in [DedupMode::UpToIso, DedupMode::UpToIsoAndAnti] {
            let c = canonical_form(&s, mode).unwrap();
            prop_assert_eq!(&canonical_form(&moved, mode).unwrap(), &c);
            prop_assert_eq!(&canonical_form(&c, mode).unwrap(), &c);
        }
        prop_assert_eq!(
            canonical_form(&s, DedupMode::UpToIsoAndAnti).unwrap(),
            canonical_form(&s.transpose(), DedupMode::UpToIsoAndAnti).unwrap()
        );
    }
}

#[test]
fn hundred_pairs_per_order() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for n in 1..=4 {
        let strategy = (
            prop::sample::select(labeled(n).to_vec()),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        );
        for _ in 0..100 {
            let (s, p) = strategy.new_tree(&mut runner).unwrap().current();
            let moved = s.relabel(&p);
            let want = oracle::orbit_min(s.cells(), n, false);
            assert_eq!(
                canonical_form(&moved, DedupMode::UpToIso).unwrap().cells(),
                &want[..]
            );
        }
    }
}

#[test]
fn text_and_json_round_trip() {
    for n in 1..=4 {
        for t in labeled(n) {
            let text = to_text(t);
            assert_eq!(&parse_text(&text).unwrap(), t);
            assert_eq!(to_text(&parse_text(&text).unwrap()), text);
            let file = TableFile {
                table: t.clone(),
                name: Some("t".into()),
                source: None,
            };
            assert_eq!(parse_table_file(&to_json_record(&file)).unwrap(), file);
        }
    }
}

#[test]
fn enumeration_is_independent_of_parallel_width() {
    for mode in [
        DedupMode::Labeled,
        DedupMode::UpToIso,
        DedupMode::UpToIsoAndAnti,
    ] {
        let one = enumerate_semigroups(&EnumerationConfig::new(4, mode)).unwrap();
        let three =
            enumerate_semigroups(&EnumerationConfig::new(4, mode).with_parallel_width(3)).unwrap();
        assert_eq!(one, three);
    }
}

#[test]
fn monogenic_invariants() {
    for s in classes_up_to(4) {
        let n = s.order();
        let data = all_monogenic_data(&s);
        let e = exponent(&s).unwrap();
        let idem = idempotents(&s);
        for d in &data {
            let (m, r, chain) = oracle::power_chain(s.cells(), n, d.generator);
            assert_eq!((d.index, d.period, &d.powers), (m, r, &chain));
            let mut sorted = chain.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), chain.len());
            assert_eq!(s.pow(d.generator, m + r), s.pow(d.generator, m));
            assert_eq!(chain.iter().filter(|x| idem.contains(x)).count(), 1);
            assert!(d.order() as u64 <= 2 * e);
            // K_{a^i} = <a^i> ∩ K_a
            for i in 1..=d.order() {
                let ai = monogenic_data(&s, s.pow(d.generator, i)).unwrap();
                let mut left = ai.kernel.clone();
                left.sort_unstable();
                let mut right: Vec<usize> = ai
                    .powers
                    .iter()
                    .copied()
                    .filter(|x| d.kernel.contains(x))
                    .collect();
                right.sort_unstable();
                assert_eq!(left, right);
            }
        }
        // exponent is the least k with every x^k idempotent
        let works = |k: u64| (0..n).all(|x| idem.contains(&s.pow(x, k as usize)));
        assert!(works(e));
        assert!((1..e).all(|k| !works(k)));
        // the S_f partition S
        let mut seen = vec![0; n];
        for &f in &idem {
            for x in s_f(&s, f).unwrap() {
                seen[x] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
        // maximal monogenic sets cover S
        let maxes = maximal_monogenic(&s);
        assert!((0..n).all(|x| maxes.iter().any(|m| m.elements.contains(&x))));
    }
}

fn transitive_join(a: &[usize], b: &[usize]) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut rel = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            rel[x][y] = a[x] == a[y] || b[x] == b[y];
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

#[test]
fn green_cross_checks() {
    let corpus: Vec<CayleyTable> = (1..=5)
        .flat_map(|n| {
            enumerate_semigroups(&EnumerationConfig::new(n, DedupMode::UpToIsoAndAnti)).unwrap()
        })
        .collect();
    for s in &corpus {
        let n = s.order();
        let g = green_relations(s);
        assert_eq!(g.d, g.j, "D != J on {:?}", s.rows());
        let join = transitive_join(&g.l, &g.r);
        for x in 0..n {
            for y in 0..n {
                assert_eq!(join[x][y], g.d[x] == g.d[y]);
                if n <= 4 {
                    let meet = g.l[x] == g.l[y] && g.r[x] == g.r[y];
                    assert_eq!(meet, g.h[x] == g.h[y]);
                }
            }
        }
        let all_index_one = all_monogenic_data(s).iter().all(|d| d.index == 1);
        assert_eq!(is_completely_regular(s), all_index_one);
    }
}

#[test]
fn group_has_one_class_per_relation() {
    let z6 = epg::semigroup::cyclic_group(6).unwrap();
    let g = green_relations(&z6);
    for rel in GreenRelation::ALL {
        assert_eq!(g.class_count(rel), 1);
    }
}

#[test]
fn graph_invariants_on_corpus() {
    for s in classes_up_to(4) {
        let g = enhanced_power_graph(&s);
        let c = classify(&g);
        let (omega, _) = clique_number(&g);
        assert!(omega <= chromatic_number(&g).unwrap());
        assert_eq!(c.bipartite, c.acyclic);
        assert_eq!(c.bipartite, c.odd_cycle_witness.is_none());
        assert_eq!(c.component_count, idempotents(&s).len());
        if c.tree {
            assert!(c.connected && c.acyclic);
        }
        let v = g.vertex_count();
        if is_planar(&g).planar && v >= 3 {
            assert!(g.edge_count() <= 3 * v - 6);
        }
    }
}

#[test]
fn audit_reports_fabricated_disagreement() {
    let checks = builtin_checks();
    let report = run_audit(&checks, &classes_up_to(3));
    assert_eq!(report.counterexample_count(), 0);
    assert!(report.to_json_lines().is_empty());
    let band = checks.iter().find(|c| c.id == "C-band-null").unwrap();
    let fabricated = Counterexample {
        check: band.id.into(),
        table: epg::semigroup::left_zero(2).unwrap(),
        lhs: Value::Bool(true),
        rhs: Value::Bool(false),
    };
    assert!(!fabricated.reverify(band));
}

#[test]
fn false_claim_yields_replayable_counterexamples() {
    use epg::audit::{Direction, TheoremCheck};
    let claim = TheoremCheck {
        id: "X-commutative-band",
        statement: "every band is commutative",
        direction: Direction::Implies,
        hypothesis: |_| true,
        lhs: |s| Value::Bool(epg::semigroup::is_band(s.table())),
        rhs: |s| Value::Bool(s.table().is_commutative()),
    };
    let report = run_audit(std::slice::from_ref(&claim), &classes_up_to(3));
    let c = &report.checks[0];
    assert!(!c.counterexamples.is_empty());
    assert_eq!(c.agreements + c.counterexamples.len(), c.hypothesis_count);
    for cx in &c.counterexamples {
        assert!(cx.reverify(&claim));
        assert_eq!(
            &canonical_form(&cx.table, DedupMode::UpToIsoAndAnti).unwrap(),
            &cx.table
        );
    }
    let lines = report.to_json_lines();
    assert_eq!(lines.lines().count(), c.counterexamples.len());
    let first: Counterexample = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first, c.counterexamples[0]);
    assert!(report.to_text().contains("FAIL X-commutative-band"));
}
