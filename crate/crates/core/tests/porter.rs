use fpnb_core::porter_stem;
use fpnb_core::preprocess::porter::{apply_step, Step};

const STEPS: &str = include_str!("../../../fixtures/porter_steps.tsv");
const VOCAB: &str = include_str!("../../../fixtures/porter_vocab.tsv");

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').collect())
}

fn step(name: &str) -> Step {
    match name {
        "1a" => Step::Step1a,
        "1b" => Step::Step1b,
        "1c" => Step::Step1c,
        "2" => Step::Step2,
        "3" => Step::Step3,
        "4" => Step::Step4,
        "5a" => Step::Step5a,
        "5b" => Step::Step5b,
        other => panic!("unknown step {other}"),
    }
}

#[test]
fn published_step_examples() {
    let mut n = 0;
    for r in rows(STEPS) {
        assert_eq!(
            apply_step(r[1], step(r[0])),
            r[2],
            "step {} on {}",
            r[0],
            r[1]
        );
        n += 1;
    }
    assert!(n >= 20);
}

#[test]
fn reference_vocabulary() {
    let mut failures = Vec::new();
    let mut n = 0;
    for r in rows(VOCAB) {
        n += 1;
        let got = porter_stem(r[0]);
        if got != r[1] {
            failures.push(format!("{} -> {} (want {})", r[0], got, r[1]));
        }
    }
    assert!(n > 1000);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn whole_word_examples() {
    assert_eq!(porter_stem("caresses"), "caress");
    assert_eq!(porter_stem("sky"), "sky");
    // Step 2 yields "relate"; step 5a then drops the final e.
    assert_eq!(apply_step("relational", Step::Step2), "relate");
    assert_eq!(porter_stem("relational"), "relat");
    assert_eq!(porter_stem("generalizations"), "gener");
    assert_eq!(porter_stem("oscillators"), "oscil");
}
