use mzv_core::algebra::coeff;
use mzv_core::identities::*;
use mzv_core::{Combination, Index};
use num_bigint::BigInt;
use num_traits::Zero;

#[test]
fn s_poly_support_and_size() {
    for k in 2..=12u32 {
        let s = s_poly(k);
        assert_eq!(s.len(), compositions_min2(k).len(), "k = {k}");
        assert!(s.is_homogeneous(k as u64));
        assert!(s.is_admissible());
        assert!(s.indices().all(|ix| ix.parts().iter().all(|&p| p >= 2)));
    }
}

#[test]
fn sakata_through_order_twelve() {
    let report = verify_sakata(12).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn main_through_order_twelve() {
    let report = verify_main(12).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn reduction_chain_agrees() {
    // main  <=  sakata + eq3  <=  odd + eq2
    for order in 2..=10usize {
        let main = verify_main(order).unwrap().passed();
        let sakata = verify_sakata(order).unwrap().passed();
        let eq3 = verify_eq3(order).unwrap().passed();
        let eq2 = (1..=order as u32 / 2).all(|n| verify_eq2(n).unwrap().passed());
        let odd = (1..=order as u32).step_by(2).all(|n| verify_odd_vanishing(n).unwrap().passed());
        assert!(main && sakata && eq3 && eq2 && odd, "order {order}");
    }
    // the coefficients of the reduced product are the convolutions
    let s = sakata_rhs(8);
    let prod = s.mul(&s.flip()).unwrap();
    for m in 0..=8u32 {
        let expected = if m == 0 { Combination::one() } else { alternating_convolution(m) };
        assert_eq!(prod.coefficient(m as usize).unwrap(), &expected, "degree {m}");
    }
}

#[test]
fn eq2_up_to_six() {
    for n in 1..=6 {
        let report = verify_eq2(n).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn eq2_detects_a_wrong_sign() {
    let lhs = eq2_lhs(2).unwrap();
    let wrong = Combination::term(Index::repeated(2, 2), coeff(-1, 1));
    let m = combination_mismatches(4, &wrong, &lhs);
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].expected, "-1");
    assert_eq!(m[0].actual, "1");
}

#[test]
fn odd_vanishing_up_to_eleven() {
    for n in (1..=11).step_by(2) {
        assert!(verify_odd_vanishing(n).unwrap().passed(), "n = {n}");
    }
}

#[test]
fn binomial_lemma_up_to_two_hundred() {
    for k in 4..=200 {
        assert_eq!(binomial_lemma_residual(k).unwrap(), BigInt::zero(), "k = {k}");
    }
    assert!(verify_binomial(200).unwrap().passed());
}

#[test]
fn case_analysis_up_to_five() {
    for n in 1..=5 {
        let report = verify_case_analysis(n).unwrap();
        assert!(report.passed(), "{report}");
    }
    let lhs = eq2_lhs(2).unwrap();
    let nonzero: Vec<_> = compositions(4)
        .into_iter()
        .map(|p| Index::new(p).unwrap())
        .filter(|ix| !lhs.coefficient_of(ix).is_zero())
        .collect();
    assert_eq!(nonzero, vec![Index::repeated(2, 2)]);
}

#[test]
fn report_json_schema() {
    let report = verify_eq2(2).unwrap();
    let v: serde_json::Value = serde_json::to_value(&report).unwrap();
    assert_eq!(v["identity"], "eq2");
    assert_eq!(v["parameter"], 2);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["mismatches"], serde_json::json!([]));

    let failing = mzv_core::Report::new(
        "eq2",
        2,
        combination_mismatches(4, &Combination::zero(), &eq2_lhs(2).unwrap()),
    );
    let v: serde_json::Value = serde_json::to_value(&failing).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(
        v["mismatches"][0],
        serde_json::json!({"degree": 4, "index": "[2,2]", "expected": "0", "actual": "1"})
    );
    let back: mzv_core::Report = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(back, failing);

    let mut forged = v;
    forged["status"] = "pass".into();
    assert!(serde_json::from_value::<mzv_core::Report>(forged).is_err());
}
