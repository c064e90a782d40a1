use std::path::Path;

use doublelift::Monoid;
use doublelift_cli::corpus::corpus;
use doublelift_cli::format::{Document, MonoidDoc, Names};
use proptest::prelude::*;

#[test]
fn stored_fixtures_are_canonical() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut seen = 0;
    for dir in std::fs::read_dir(&root).unwrap() {
        for file in std::fs::read_dir(dir.unwrap().path()).unwrap() {
            let path = file.unwrap().path();
            let text = std::fs::read_to_string(&path).unwrap();
            let doc = Document::parse(&text).unwrap();
            assert_eq!(doc.to_canonical(), text, "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 10);
}

#[test]
fn corpus_round_trips_through_the_library() {
    for (label, doc) in corpus().unwrap() {
        let back = Document::parse(&doc.to_canonical()).unwrap();
        assert_eq!(back, doc.canonicalized(), "{label}");
        assert_eq!(back.rebuild().unwrap().canonicalized(), back, "{label}");
    }
}

#[test]
fn names_survive_and_unknown_fields_do_not() {
    let mut doc = MonoidDoc::from(&Monoid::cyclic(2));
    doc.names = Some(Names::from([("elements".to_string(), vec!["1".to_string(), "-1".to_string()])]));
    let text = Document::Monoid(doc.clone()).to_canonical();
    assert!(text.contains("\"elements\": [\"1\", \"-1\"]"), "{text}");
    assert_eq!(Document::parse(&text).unwrap(), Document::Monoid(doc));
    let extra = text.replacen("\"size\"", "\"colour\": 3,\n  \"size\"", 1);
    assert!(Document::parse(&extra).is_err());
}

proptest! {
    #[test]
    fn shuffled_tables_canonicalize_identically(
        (a, b, perm) in (1usize..5, 1usize..4).prop_flat_map(|(a, b)| {
            let n = a * b * a * b;
            (Just(a), Just(b), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        }),
    ) {
        let m = Monoid::cyclic(a).direct_product(&Monoid::cyclic(b));
        let doc = MonoidDoc::from(&m);
        let mut shuffled = doc.clone();
        shuffled.table = perm.iter().map(|&i| doc.table[i]).collect();
        let (x, y) = (Document::Monoid(doc), Document::Monoid(shuffled));
        prop_assert_eq!(x.to_canonical(), y.to_canonical());
        let back = Document::parse(&y.to_canonical()).unwrap();
        prop_assert_eq!(back.to_canonical(), x.to_canonical());
        prop_assert_eq!(back.rebuild().unwrap(), x);
    }
}
