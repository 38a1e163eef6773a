//! Closed-form values checked against the exhaustive oracle on the small
//! instances where it applies (token graphs of at most 30 vertices).

use token_alpha::formulas::alpha_closed_form;
use token_alpha::mis::max_independent_set_exhaustive;
use token_alpha::token::build_f2;
use token_alpha::FamilySpec;

fn oracle(spec: &FamilySpec) -> usize {
    let tg = build_f2(&spec.generate().unwrap()).unwrap();
    max_independent_set_exhaustive(tg.graph()).unwrap().size
}

#[test]
fn frozen_values() {
    let e3_k4 = FamilySpec::Join(Box::new(FamilySpec::Empty(3)), Box::new(FamilySpec::Complete(4)));
    let cases = [
        (FamilySpec::Fan(2, 3), 4),
        (FamilySpec::Fan(4, 3), 8),
        (e3_k4, 5),
        (FamilySpec::Split(2, 5), 4),
        (FamilySpec::Split(3, 4), 5),
        (FamilySpec::Wheel(3, 5), 8),
        (FamilySpec::PathUnion(vec![3, 2]), 6),
        (FamilySpec::Path(4), 4),
        (FamilySpec::Cycle(5), 5),
    ];
    for (spec, expected) in cases {
        assert_eq!(oracle(&spec), expected, "{spec}");
        assert_eq!(alpha_closed_form::<u64>(&spec).unwrap().value, expected as u64, "{spec}");
    }
}

#[test]
fn every_formula_instance_within_oracle_reach() {
    let mut specs = Vec::new();
    for n in 1..=7 {
        for m in 1..=7 {
            if n + m <= 8 {
                specs.push(FamilySpec::Fan(n, m));
                specs.push(FamilySpec::Split(n, m));
                specs.push(FamilySpec::CompleteBipartite(n, m));
                if m >= 3 {
                    specs.push(FamilySpec::Wheel(n, m));
                }
            }
        }
    }
    for spec in specs {
        let f = alpha_closed_form::<u64>(&spec).unwrap();
        assert_eq!(f.value, oracle(&spec) as u64, "{spec} ({})", f.formula_id);
    }
}
