mod common;

use proptest::prelude::*;
use seqlogic::lambdai::is_lambda_i;
use seqlogic::reduce::{
    head_step, normal_order_redex, normalize, normalize_traced, returns_to_itself, ReduceOutcome,
};
use seqlogic::term::alpha_eq;

use common::{innermost_normalize, term, to_lambda_i};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn normal_order_and_innermost_agree(t in term(20)) {
        if let ReduceOutcome::NormalForm { term: n, .. } = normalize(&t, 500) {
            if let Some(m) = innermost_normalize(&t, 2000, 5000) {
                prop_assert!(alpha_eq(&n, &m), "{}: {} vs {}", t, n, m);
            }
        }
    }

    #[test]
    fn normalize_is_deterministic(t in term(20)) {
        prop_assert_eq!(normalize(&t, 300), normalize(&t, 300));
        prop_assert_eq!(normalize_traced(&t, 300), normalize_traced(&t, 300));
    }

    #[test]
    fn normal_forms_have_no_redex(t in term(20)) {
        if let ReduceOutcome::NormalForm { term: n, .. } = normalize(&t, 300) {
            prop_assert!(head_step(&n).is_none());
            prop_assert!(normal_order_redex(&n).is_none());
        }
    }

    #[test]
    fn cycles_replay(t in term(20)) {
        if let ReduceOutcome::CycleDetected { witness, loop_length, .. } = normalize(&t, 300) {
            prop_assert!(returns_to_itself(&witness, loop_length));
        }
    }

    #[test]
    fn traces_end_where_normalize_ends(t in term(20)) {
        let (outcome, trace) = normalize_traced(&t, 300);
        prop_assert_eq!(&outcome, &normalize(&t, 300));
        prop_assert_eq!(trace.entries.len(), outcome.steps() + 1);
        if let Some(n) = outcome.normal_form() {
            prop_assert!(alpha_eq(&trace.entries.last().unwrap().term, n));
        }
    }

    #[test]
    fn lambda_i_is_closed_under_reduction(t in term(20)) {
        let t = to_lambda_i(&t);
        prop_assert!(is_lambda_i(&t));
        let (_, trace) = normalize_traced(&t, 100);
        for e in &trace.entries {
            prop_assert!(is_lambda_i(&e.term), "{} is not λI", e.term);
        }
    }

    #[test]
    fn lambda_i_normalization_is_uniform(t in term(16)) {
        let t = to_lambda_i(&t);
        if let ReduceOutcome::NormalForm { term: n, .. } = normalize(&t, 300) {
            let m = innermost_normalize(&t, 20_000, 200_000);
            prop_assert!(m.is_some(), "{} has a normal form but innermost reduction did not finish", t);
            prop_assert!(alpha_eq(&n, &m.unwrap()));
        }
    }
}
