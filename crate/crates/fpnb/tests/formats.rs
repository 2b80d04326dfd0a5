mod common;

use common::*;
use fpnb::formats::{
    classification_line, format_score, itemsets_tsv, parse_corpus, parse_transactions, CorpusFile,
};
use fpnb::{load_model, save_model};
use fpnb_core::{
    classify_batch, mine_frequent_itemsets, train, Corpus, KeywordSet, PipelineFlags, Stemming,
};
use proptest::prelude::*;

const WORDS: [&str; 8] = [
    "alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta",
];

fn labeled_corpus() -> impl Strategy<Value = Vec<KeywordSet>> {
    let doc = (
        0usize..3,
        prop::collection::btree_set(0usize..WORDS.len(), 1..6),
    );
    prop::collection::vec(doc, 4..20).prop_map(|docs| {
        docs.into_iter()
            .enumerate()
            .map(|(i, (class, words))| {
                let label = format!("class {}", ["one", "two", "three"][class]);
                KeywordSet::new(
                    format!("d{i}"),
                    Some(label),
                    words.into_iter().map(|w| WORDS[w]),
                )
                .unwrap()
            })
            .collect()
    })
}

fn flags() -> impl Strategy<Value = Option<PipelineFlags>> {
    prop::option::of(
        (any::<bool>(), any::<bool>()).prop_map(|(porter, singularize)| PipelineFlags {
            stemming: if porter {
                Stemming::Porter
            } else {
                Stemming::Off
            },
            singularize,
        }),
    )
}

fn corpus_text(docs: &[KeywordSet]) -> String {
    let mut s = String::from("#format: pre\n");
    for d in docs {
        s.push_str(&format!(
            "{}\t{}\t{}\n",
            d.id(),
            d.label().unwrap_or(""),
            d.keywords().join(" ")
        ));
    }
    s
}

proptest! {
    #[test]
    fn model_round_trip(docs in labeled_corpus(), min_sup in 1u32..4, flags in flags()) {
        let Ok(corpus) = Corpus::new(docs) else { return Ok(()) };
        let Ok(mut model) = train(&corpus, min_sup) else { return Ok(()) };
        if let Some(f) = flags {
            model = model.with_pipeline(f);
        }
        let text = save_model(&model);
        let loaded = load_model(&text).unwrap();
        prop_assert_eq!(&loaded, &model);
        prop_assert_eq!(save_model(&loaded), text);
    }

    #[test]
    fn corpus_file_round_trip(docs in labeled_corpus()) {
        let parsed = parse_corpus(&corpus_text(&docs)).unwrap();
        let CorpusFile::Pre(back) = parsed else { panic!("expected pre format") };
        prop_assert_eq!(back.len(), docs.len());
        for (a, b) in back.iter().zip(&docs) {
            prop_assert_eq!(a.id(), b.id());
            prop_assert_eq!(a.label(), b.label());
            prop_assert_eq!(a.keywords(), b.keywords());
        }
    }

    #[test]
    fn transaction_file_mines_like_the_core(docs in labeled_corpus(), min_sup in 1u32..4) {
        let text: String = docs.iter().map(|d| d.keywords().join(" ") + "\n").collect();
        let from_file = mine_frequent_itemsets(&parse_transactions(&text), min_sup, 1).unwrap();
        let direct = mine_frequent_itemsets(
            &fpnb_core::TransactionDb::new(docs.iter().map(|d| d.keywords().to_vec())),
            min_sup,
            1,
        ).unwrap();
        prop_assert_eq!(itemsets_tsv(&from_file), itemsets_tsv(&direct));
    }

    #[test]
    fn scores_keep_ten_significant_digits(x in 1e-12f64..1.0) {
        let s = format_score(x);
        let back: f64 = s.parse().unwrap();
        prop_assert!(((back - x) / x).abs() <= 5e-10, "{} -> {}", x, s);
        let digits: String = s.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').collect();
        prop_assert_eq!(digits.len(), 10, "{}", s);
    }
}

#[test]
fn classification_lines_for_the_test_documents() {
    let model = train(
        &Corpus::new(keyword_sets("train_pre.tsv", &test_config())).unwrap(),
        2,
    )
    .unwrap();
    let lines: Vec<String> = classify_batch(&keyword_sets("test_pre.tsv", &test_config()), &model)
        .iter()
        .map(classification_line)
        .collect();
    assert_eq!(
        lines[1],
        "T2\tSocial Network\tSocial Network=0.0007580992241\tComputer Network=0.000009329446064\t\
         information,people;people,website;community,interest,people"
    );
    let unmatched = KeywordSet::new("x", None, ["firewall"]).unwrap();
    assert_eq!(
        classification_line(&classify_batch(&[unmatched], &model)[0]),
        "x\tSocial Network\tSocial Network=0.6000000000\tComputer Network=0.4000000000\t-"
    );
}
