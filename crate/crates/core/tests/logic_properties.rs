mod common;

use proptest::prelude::*;
use seqlogic::axioms::{check_equation, AxiomStatus, Equation};
use seqlogic::lambdai::is_lambda_i;
use seqlogic::logic::{
    encode_value, project, truth_table, tuples, Arity, Connective, Decoded, Style, TruthTable,
    TruthValue,
};
use seqlogic::prop::{
    compile, direct_eval, eval_prop, parse_assignment, parse_prop, Assignment, Prop, RecEnv,
};
use seqlogic::term::free_vars;
use seqlogic::DEFAULT_FUEL;

use common::{finite_prop, prop_depth};
use TruthValue::*;

const CONNECTIVES: [Connective; 4] = [
    Connective::Neg,
    Connective::Conj,
    Connective::Disj,
    Connective::Impl,
];
const ARITIES: [Arity; 4] = [Arity::Two, Arity::Three, Arity::Four, Arity::Five];

fn table(c: Connective, a: Arity, style: Style) -> TruthTable {
    truth_table(c, a, style, DEFAULT_FUEL).unwrap()
}

#[test]
fn projections_commute_with_connectives() {
    let pairs = [
        (Arity::Five, Arity::Four),
        (Arity::Five, Arity::Three),
        (Arity::Four, Arity::Three),
    ];
    for c in CONNECTIVES {
        for (from, to) in pairs {
            let (big, small) = (table(c, from, Style::Church), table(c, to, Style::Church));
            for cell in &big.cells {
                let down: Vec<TruthValue> = cell
                    .inputs
                    .iter()
                    .map(|&v| project(v, to).unwrap())
                    .collect();
                assert_eq!(
                    Some(project(cell.value, to).unwrap()),
                    small.get(&down),
                    "{} {:?} from {} to {}",
                    c.name(),
                    cell.inputs,
                    from,
                    to
                );
            }
        }
    }
    for v in Arity::Five.values() {
        let twice = project(project(*v, Arity::Four).unwrap(), Arity::Three).unwrap();
        assert_eq!(twice, project(*v, Arity::Three).unwrap());
    }
}

#[test]
fn boolean_corner_is_the_two_valued_table() {
    for c in CONNECTIVES {
        let two = table(c, Arity::Two, Style::Church);
        for a in [Arity::Three, Arity::Four, Arity::Five] {
            let t = table(c, a, Style::Church);
            for cell in &two.cells {
                assert_eq!(t.get(&cell.inputs), Some(cell.value));
            }
        }
    }
}

#[test]
fn undefined_first_operand_decides_the_row() {
    for a in ARITIES {
        for c in [Connective::Conj, Connective::Disj, Connective::Impl] {
            let t = table(c, a, Style::Church);
            for &x in a.values().iter().filter(|v| v.is_bot()) {
                for &y in a.values() {
                    assert_eq!(t.get(&[x, y]), Some(x), "{} {x} {y}", c.name());
                }
            }
        }
        let t = table(Connective::Neg, a, Style::Church);
        for &x in a.values().iter().filter(|v| v.is_bot()) {
            assert_eq!(t.get(&[x]), Some(x));
        }
    }
}

// The λI booleans must evaluate both branches, so only the cells without an
// undefined input can coincide with the Church ones.
#[test]
fn styles_agree_on_defined_inputs() {
    for c in CONNECTIVES {
        for a in ARITIES {
            let (church, lambda_i) = (table(c, a, Style::Church), table(c, a, Style::LambdaI));
            for cell in church
                .cells
                .iter()
                .filter(|c| c.inputs.iter().all(|v| !v.is_bot()))
            {
                assert_eq!(lambda_i.get(&cell.inputs), Some(cell.value));
            }
        }
        assert_eq!(
            table(c, Arity::Two, Style::LambdaI).cells,
            table(c, Arity::Two, Style::Church).cells
        );
    }
}

#[test]
fn lambda_i_encodings_are_lambda_i_terms() {
    for v in Arity::Five.values().iter().chain([Bot, BotD].iter()) {
        assert!(is_lambda_i(&encode_value(*v, Style::LambdaI)), "{v}");
    }
    assert!(!is_lambda_i(&encode_value(BotO, Style::Church)));
}

/// Equations over x and y built from random propositions.
fn equation() -> impl Strategy<Value = Equation> {
    let leaf = prop_oneof![
        Just(Prop::Var("x".into())),
        Just(Prop::Var("y".into())),
        prop::sample::select(vec![T, F, BotHA]).prop_map(Prop::Const),
    ];
    let side = leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Prop::not),
            (inner.clone(), inner.clone()).prop_map(|(p, q)| Prop::and(p, q)),
            (inner.clone(), inner).prop_map(|(p, q)| Prop::or(p, q)),
        ]
    });
    (side.clone(), side).prop_map(|(lhs, rhs)| Equation {
        name: "random".into(),
        lhs,
        rhs,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counterexamples_are_the_first_in_enumeration_order(e in equation()) {
        let vars = e.vars();
        let status = check_equation(&e, Arity::Four, Style::Church, DEFAULT_FUEL).unwrap();
        let value = |p: &Prop, asg: &Assignment| {
            eval_prop(p, &RecEnv::new(), asg, Arity::Four, Style::Church, DEFAULT_FUEL).unwrap().value().unwrap()
        };
        let mut first = None;
        for vals in tuples(Arity::Four.values(), vars.len()) {
            let asg: Assignment = vars.iter().cloned().zip(vals.iter().copied()).collect();
            let (l, r) = (value(&e.lhs, &asg), value(&e.rhs, &asg));
            if l != r {
                first = Some(AxiomStatus::CounterExample {
                    assignment: vars.iter().cloned().zip(vals).collect(),
                    lhs: l,
                    rhs: r,
                });
                break;
            }
        }
        let expected = first.unwrap_or(AxiomStatus::Holds { assignments: 4usize.pow(vars.len() as u32) });
        prop_assert_eq!(status, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn finite_boolean_propositions_reduce_to_booleans(p in finite_prop(&[T, F])) {
        prop_assume!(prop_depth(&p) <= 8);
        let env = RecEnv::new();
        let asg = Assignment::new();
        let direct = direct_eval(&p, &env, &asg).unwrap();
        let reduced = eval_prop(&p, &env, &asg, Arity::Three, Style::Church, DEFAULT_FUEL).unwrap();
        prop_assert_eq!(Decoded::Value(direct), reduced);
        prop_assert!(direct == T || direct == F);
        let two = eval_prop(&p, &env, &asg, Arity::Two, Style::LambdaI, DEFAULT_FUEL).unwrap();
        prop_assert_eq!(two, reduced);
    }

    #[test]
    fn reduction_agrees_with_direct_evaluation(p in finite_prop(&[T, F, Bot])) {
        prop_assume!(prop_depth(&p) <= 8);
        let env = RecEnv::new();
        let asg = Assignment::new();
        let direct = direct_eval(&p, &env, &asg).unwrap();
        let reduced = eval_prop(&p, &env, &asg, Arity::Three, Style::Church, DEFAULT_FUEL).unwrap();
        prop_assert_eq!(Decoded::Value(direct), reduced);
    }

    #[test]
    fn compiled_propositions_are_closed(p in finite_prop(&[T, F, Bot, BotHA, BotIL, BotO])) {
        for style in [Style::Church, Style::LambdaI] {
            let t = compile(&p, &RecEnv::new(), &Assignment::new(), style).unwrap();
            prop_assert!(free_vars(&t).is_empty());
        }
    }
}

#[test]
fn rational_corpus() {
    let mut cases: Vec<(String, String)> = vec![
        (r"rec X = T /\ X in X".into(), String::new()),
        (r"rec X = T \/ X in X".into(), String::new()),
        ("rec X = ~X in X".into(), String::new()),
    ];
    for a in ["T", "F", "_|_"] {
        for b in ["T", "F", "_|_"] {
            cases.push((
                "rec W = if a then T else (if b then W else W) in W".into(),
                format!("a={a},b={b}"),
            ));
        }
    }
    for (src, asg) in &cases {
        let (p, env) = parse_prop(src).unwrap();
        let asg = parse_assignment(asg).unwrap();
        let direct = direct_eval(&p, &env, &asg).unwrap();
        let reduced = eval_prop(&p, &env, &asg, Arity::Three, Style::Church, DEFAULT_FUEL).unwrap();
        assert_eq!(Decoded::Value(direct), reduced, "{src} with {asg:?}");
    }
}
