//! Property tests against independent brute-force oracles.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use teamklm::circuits::{parse_netlist, print_netlist};
use teamklm::formula::theta_of_team;
use teamklm::gen::{random_model, random_succinct, ModelParams};
use teamklm::succinct::{ent_pdl, lexmax_model, sat_oracle, BitPreference, Mode};
use teamklm::teams::{all_teams, eval_classical, eval_team};
use teamklm::{Domain, Formula, Limits, Team, Valuation};

const VARS: [&str; 3] = ["p", "q", "r"];

fn formula_with(dep: bool) -> impl Strategy<Value = Formula> {
    let var = prop::sample::select(&VARS[..]).prop_map(String::from);
    let lit = (var.clone(), any::<bool>()).prop_map(|(v, b)| Formula::literal(v, b));
    let leaf = if dep {
        prop_oneof![
            4 => lit,
            1 => Just(Formula::Top),
            1 => Just(Formula::Bot),
            2 => (prop::sample::subsequence(&VARS[..], 0..=2), var)
                .prop_map(|(args, b)| Formula::dep(args.into_iter().map(String::from).collect::<Vec<_>>(), b)),
        ]
        .boxed()
    } else {
        prop_oneof![4 => lit, 1 => Just(Formula::Top), 1 => Just(Formula::Bot)].boxed()
    };
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
        ]
    })
}

fn domain() -> Domain {
    Domain::new(VARS).unwrap()
}

/// Team semantics straight from the definitions, with disjunction split
/// over every assignment of members to the left, right or both sides.
fn naive(members: &[Valuation], f: &Formula) -> bool {
    match f {
        Formula::Var(_) | Formula::NegVar(_) | Formula::Top => {
            members.iter().all(|v| eval_classical(v, f).unwrap())
        }
        Formula::Bot => members.is_empty(),
        Formula::And(a, b) => naive(members, a) && naive(members, b),
        Formula::Or(a, b) => {
            let k = members.len();
            (0..3usize.pow(k as u32)).any(|mut code| {
                let (mut y, mut z) = (Vec::new(), Vec::new());
                for v in members {
                    match code % 3 {
                        0 => y.push(v.clone()),
                        1 => z.push(v.clone()),
                        _ => {
                            y.push(v.clone());
                            z.push(v.clone());
                        }
                    }
                    code /= 3;
                }
                naive(&y, a) && naive(&z, b)
            })
        }
        Formula::Dep(args, b) => members.iter().all(|v| {
            members.iter().all(|w| {
                !args.iter().all(|a| v.value_of(a) == w.value_of(a)) || v.value_of(b) == w.value_of(b)
            })
        }),
    }
}

fn team_strategy() -> impl Strategy<Value = Team> {
    prop::collection::btree_set(0u32..8, 0..=5).prop_map(|codes| Team::from_codes(&domain(), codes).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn printing_then_parsing_is_identity(f in formula_with(true)) {
        let back: Formula = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn flattening_is_idempotent_and_flat(f in formula_with(true)) {
        let g = f.flatten();
        prop_assert!(g.is_flat());
        prop_assert_eq!(g.flatten(), g.clone());
        prop_assert!(g.vars().is_subset(&f.vars()));
    }

    #[test]
    fn checker_matches_the_definitions(f in formula_with(true), t in team_strategy()) {
        let members: Vec<Valuation> = t.valuations().collect();
        prop_assert_eq!(eval_team(&t, &f).unwrap(), naive(&members, &f));
    }

    #[test]
    fn sat_matches_truth_tables(f in formula_with(false)) {
        let d = domain();
        let r = sat_oracle(&f, &d, &Limits::default()).unwrap();
        let any = d.valuations().any(|v| eval_classical(&v, &f).unwrap());
        prop_assert_eq!(r.satisfiable, any);
        prop_assert_eq!(r.model.is_some(), any);
        if let Some(v) = r.model {
            prop_assert!(eval_classical(&v, &f).unwrap());
        }
    }

    #[test]
    fn greedy_extremes_match_brute_force(f in formula_with(false)) {
        let d = domain();
        let l = Limits::default();
        let models: Vec<u32> = d.valuations().filter(|v| eval_classical(v, &f).unwrap()).map(|v| v.code()).collect();
        let hi = lexmax_model(&f, &d, BitPreference::OneFirst, &l).unwrap().map(|v| v.code());
        let lo = lexmax_model(&f, &d, BitPreference::ZeroFirst, &l).unwrap().map(|v| v.code());
        prop_assert_eq!(hi, models.iter().max().copied());
        prop_assert_eq!(lo, models.iter().min().copied());
    }

    #[test]
    fn entailment_matches_minimal_state_definition(seed in any::<u64>(), f in formula_with(true), g in formula_with(true)) {
        let d = domain();
        let mut rng = StdRng::seed_from_u64(seed);
        let params = ModelParams { max_states: 7, allow_empty_label: true, ..ModelParams::default() };
        let w = random_model(&mut rng, &d, &params).unwrap();
        let n = w.len();
        // Reachability from the covering pairs, by repeated relaxation.
        let mut below = vec![vec![false; n]; n];
        for (a, b) in w.covering_pairs() {
            below[b][a] = true;
        }
        loop {
            let mut changed = false;
            for s in 0..n {
                for t in 0..n {
                    if below[s][t] {
                        let via = below[t].clone();
                        for (slot, &reach) in below[s].iter_mut().zip(&via) {
                            if reach && !*slot {
                                *slot = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // Label satisfaction uses the checker, which is tested against `naive` above.
        let sat: Vec<bool> = (0..n).map(|s| eval_team(w.label(s), &f).unwrap()).collect();
        let minimal: Vec<usize> = (0..n).filter(|&s| sat[s] && !(0..n).any(|t| below[s][t] && sat[t])).collect();
        let want = minimal.iter().all(|&s| eval_team(w.label(s), &g).unwrap());
        let got = w.entails(&f, &g).unwrap();
        prop_assert_eq!(got.holds, want);
        prop_assert_eq!(&got.minimal_states, &minimal);
        prop_assert!(sat.iter().all(|&b| !b) || !minimal.is_empty());
        prop_assert_eq!(ent_pdl(&w, &f, &g).unwrap(), got);
    }

    #[test]
    fn netlists_round_trip(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_succinct(&mut rng, Mode::Team, &Domain::new(["p", "q"]).unwrap(), 3);
        for c in [m.labels(), m.order()] {
            let text = print_netlist(c);
            let back = parse_netlist(&text).unwrap();
            prop_assert_eq!(&back, c);
        }
    }
}

#[test]
fn sat_on_wide_clause_sets() {
    let mut rng = StdRng::seed_from_u64(21);
    use rand::Rng;
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let d = Domain::new((0..n).map(|i| format!("x{i}"))).unwrap();
        let clauses = rng.gen_range(1..=4 * n);
        let cnf = Formula::and_all((0..clauses).map(|_| {
            Formula::or_all((0..3).map(|_| Formula::literal(format!("x{}", rng.gen_range(0..n)), rng.gen())))
        }));
        let r = sat_oracle(&cnf, &d, &Limits::default()).unwrap();
        let any = d.valuations().any(|v| eval_classical(&v, &cnf).unwrap());
        assert_eq!(r.satisfiable, any, "{cnf}");
        if let Some(v) = r.model {
            assert!(eval_classical(&v, &cnf).unwrap());
        }
    }
}

#[test]
fn covers_separate_a_team_from_its_parts() {
    for n in 1..=2 {
        let d = Domain::new(VARS[..n].iter().copied()).unwrap();
        for x in all_teams(&d).filter(|x| x.len() > 1) {
            let mask = x.mask().unwrap();
            for y in all_teams(&d) {
                for z in all_teams(&d) {
                    let (ym, zm) = (y.mask().unwrap(), z.mask().unwrap());
                    if ym | zm != mask || ym == mask || zm == mask {
                        continue;
                    }
                    let (ty, tz) = (theta_of_team(&y, &d).unwrap(), theta_of_team(&z, &d).unwrap());
                    assert!(eval_team(&x, &Formula::or(ty.clone(), tz.clone())).unwrap());
                    assert!(!eval_team(&x, &ty).unwrap());
                    assert!(!eval_team(&x, &tz).unwrap());
                }
            }
        }
    }
}

#[test]
fn corpus_formulas_round_trip_and_flatten() {
    use teamklm::properties::{Corpus, CorpusParams};
    for n in 1..=3 {
        let d = Domain::new(VARS[..n].iter().copied()).unwrap();
        for c in [CorpusParams::default(), CorpusParams::classical(2)] {
            for f in Corpus::generate(&d, c).unwrap().formulas() {
                assert_eq!(&f.to_string().parse::<Formula>().unwrap(), f);
                assert_eq!(f.flatten().flatten(), f.flatten());
                if f.is_flat() {
                    assert_eq!(&f.flatten(), f);
                }
            }
        }
    }
}

#[test]
fn size_bounded_formulas_cut_the_powerset() {
    use teamklm::formula::size_bounded_formula;
    use teamklm::teams::models_of;
    for n in 1..=2 {
        let d = Domain::new(VARS[..n].iter().copied()).unwrap();
        for x in all_teams(&d) {
            for l in 0..=x.len() {
                let got: Vec<Team> = models_of(&size_bounded_formula(&x, l), &d, &Limits::default())
                    .unwrap()
                    .teams()
                    .collect();
                let want: Vec<Team> = all_teams(&d).filter(|y| y.is_subset(&x) && y.len() <= l).collect();
                assert_eq!(got, want, "X={x} l={l}");
            }
        }
    }
}

#[test]
fn unsatisfiable_premises_entail_everything() {
    use teamklm::prefmodel::{w_circ_star, w_pq, w_sub};
    let d = Domain::new(["p", "q"]).unwrap();
    let models = [w_pq(), w_circ_star(), w_sub(&d, &Limits::default()).unwrap()];
    for w in &models {
        for lhs in ["F", "p & ~p", "dep(p) & F"] {
            for rhs in ["F", "p", "~p", "dep(p)"] {
                let (lhs, rhs) = (lhs.parse().unwrap(), rhs.parse().unwrap());
                if w.domain().check_vars(&lhs).is_ok() && w.domain().check_vars(&rhs).is_ok() {
                    assert!(w.entails(&lhs, &rhs).unwrap().holds);
                }
            }
        }
    }
}
