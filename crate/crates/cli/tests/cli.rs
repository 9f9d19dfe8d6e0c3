//! End-to-end tests of document parsing, serialization, rendering and the
//! command-line driver.

use std::io::Write as _;

use latdual::document::{
    parse_document, parse_lattice, parse_space, space_to_text, Document, HomDocument,
    LatticeDocument,
};
use latdual::{run, CliError};
use latdual_core::enumerate::enumerate_lattices;
use latdual_core::error::Bound;
use latdual_core::functors::dual;
use latdual_core::{fixtures, Category, DualSpace, Error};
use proptest::prelude::*;

const M3_DOCUMENT: &str = r#"{"name":"M3","elements":["0","a","b","c","1"],"covers":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#;

/// Run the driver in-process, returning (exit code, stdout, stderr).
fn latdual(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["latdual"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn parses_the_diamond_document() {
    let m3 = parse_lattice(M3_DOCUMENT).unwrap();
    assert_eq!(m3.name(), "M3");
    assert!(latdual::app::isomorphic(&m3, &fixtures::diamond(3)));
}

#[test]
fn cyclic_covers_are_rejected() {
    let doc = r#"{"name":"loop","elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#;
    assert!(matches!(
        parse_lattice(doc),
        Err(CliError::Core(Error::CycleDetected(_)))
    ));
}

#[test]
fn two_maximal_elements_mean_no_top() {
    let doc = r#"{"name":"vee","elements":["0","a","b"],"covers":[["0","a"],["0","b"]]}"#;
    assert!(matches!(
        parse_lattice(doc),
        Err(CliError::Core(Error::NoBound(Bound::Top)))
    ));
}

#[test]
fn unknown_cover_names_are_located() {
    let doc = "{\n  \"name\": \"bad\",\n  \"elements\": [\"0\", \"1\"],\n  \"covers\": [\n    [\"0\", \"z\"]\n  ]\n}\n";
    let Err(CliError::Parse(e)) = parse_lattice(doc) else {
        panic!("expected a parse error")
    };
    assert_eq!(e.field.as_deref(), Some("covers[0][1]"));
    assert_eq!(e.line, Some(5));
    assert!(e.to_string().contains("unknown name `z`"), "{e}");
}

#[test]
fn duplicate_elements_are_located() {
    let doc = "{\"name\": \"dup\",\n\"elements\": [\"0\", \"0\"],\n\"covers\": []}";
    let Err(CliError::Parse(e)) = parse_lattice(doc) else {
        panic!("expected a parse error")
    };
    assert_eq!(e.field.as_deref(), Some("elements[1]"));
    assert_eq!(e.line, Some(2));
}

#[test]
fn malformed_json_reports_its_position() {
    let Err(CliError::Parse(e)) = parse_lattice("{\n  \"name\": \"x\",\n  \"elements\": [\"0\"\n}")
    else {
        panic!("expected a parse error")
    };
    assert_eq!(e.line, Some(4));
}

#[test]
fn missing_fields_are_parse_errors() {
    assert!(matches!(
        parse_lattice(r#"{"name":"x","elements":["0"]}"#),
        Err(CliError::Parse(_))
    ));
}

#[test]
fn documents_are_classified_by_their_fields() {
    assert!(matches!(
        parse_document(M3_DOCUMENT).unwrap(),
        Document::Lattice(_)
    ));
    let hom = r#"{"source":"B4","target":"M4","map":{"0":"0","a":"a","b":"b","1":"1"}}"#;
    assert!(matches!(parse_document(hom).unwrap(), Document::Hom(_)));
    let space = r#"{"category":"plo","points":["p"],"relation":[["p","p"]]}"#;
    assert!(matches!(parse_document(space).unwrap(), Document::Space(_)));
}

#[test]
fn hom_documents_build_homomorphisms() {
    let text = r#"{"source":"B4","target":"M4","map":{"0":"0","a":"a","b":"b","1":"1"}}"#;
    let doc: HomDocument = serde_json::from_str(text).unwrap();
    let alpha = doc.to_hom(text).unwrap();
    assert_eq!(alpha.source().name(), "B4");
    assert_eq!(alpha.map(), &[0, 1, 2, 5]);
}

#[test]
fn inline_lattices_are_accepted_in_hom_documents() {
    let text = format!(
        r#"{{"source":{M3_DOCUMENT},"target":{M3_DOCUMENT},"map":{{"0":"0","a":"b","b":"c","c":"a","1":"1"}}}}"#
    );
    let doc: HomDocument = serde_json::from_str(&text).unwrap();
    assert!(doc.to_hom(&text).is_ok());
}

#[test]
fn non_homomorphisms_are_rejected() {
    let text = r#"{"source":"B4","target":"C3","map":{"0":"0","a":"a","b":"a","1":"a"}}"#;
    let doc: HomDocument = serde_json::from_str(text).unwrap();
    assert!(doc.to_hom(text).is_err());
}

#[test]
fn unknown_fixtures_in_hom_documents_are_located() {
    let text = r#"{"source":"Q9","target":"B4","map":{}}"#;
    let doc: HomDocument = serde_json::from_str(text).unwrap();
    let Err(CliError::Parse(e)) = doc.to_hom(text) else {
        panic!("expected a parse error")
    };
    assert_eq!(e.field.as_deref(), Some("source"));
}

#[test]
fn lattice_documents_round_trip() {
    for a in enumerate_lattices(6).unwrap() {
        let doc = LatticeDocument::from_lattice(&a);
        let text = serde_json::to_string(&doc).unwrap();
        let back = parse_lattice(&text).unwrap();
        assert_eq!(back, a, "{}", a.name());
    }
}

#[test]
fn every_dual_round_trips_through_its_document() {
    for a in enumerate_lattices(5).unwrap() {
        for c in Category::ALL {
            let space = dual(&a, c).unwrap();
            let back = parse_space(&space_to_text(&space)).unwrap();
            assert_eq!(back, space, "{} in {c}", a.name());
        }
    }
}

proptest! {
    #[test]
    fn serialization_is_stable(index in 0usize..25, which in 0usize..7) {
        let lattices = enumerate_lattices(6).unwrap();
        let space = dual(&lattices[index], Category::ALL[which]).unwrap();
        let text = space_to_text(&space);
        let again = space_to_text(&parse_space(&text).unwrap());
        prop_assert_eq!(text, again);
    }
}

#[test]
fn urquhart_documents_keep_non_antisymmetric_orders() {
    let text = r#"{"category":"urq","points":["p","q"],"first_order":[["p","q"],["q","p"]],"second_order":[]}"#;
    let DualSpace::Urq(u) = parse_space(text).unwrap() else {
        panic!("expected an Urquhart space")
    };
    assert!(u.first_order().contains(0, 1) && u.first_order().contains(1, 0));
}

#[test]
fn dual_command_prints_the_two_element_dh_relation() {
    let (code, out, _) = latdual(&["dual", "--target", "dh", "TWO"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("\"relation\": [\n    [\"↑1\", \"↓0\"]\n  ]"),
        "{out}"
    );
}

#[test]
fn dual_command_reads_documents_and_writes_files() {
    let input = temp_file(M3_DOCUMENT);
    let output = tempfile::NamedTempFile::new().unwrap();
    let (code, out, _) = latdual(&[
        "dual",
        "--target",
        "hg",
        input.path().to_str().unwrap(),
        "--out",
        output.path().to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, ""));
    let written = std::fs::read_to_string(output.path()).unwrap();
    assert!(matches!(parse_space(&written).unwrap(), DualSpace::Hg(_)));
}

#[test]
fn dot_output_counts_edges() {
    let (code, out, _) = latdual(&["render", "M3", "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("->")).count(), 6);
    let (_, out, _) = latdual(&["dual", "--target", "dh", "TWO", "--format", "dot"]);
    assert_eq!(
        out.lines().filter(|l| l.contains("style=dashed")).count(),
        1
    );
}

#[test]
fn render_accepts_space_documents() {
    let (_, text, _) = latdual(&["dual", "--target", "plo", "B4"]);
    let file = temp_file(&text);
    let (code, out, _) = latdual(&["render", file.path().to_str().unwrap(), "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
}

#[test]
fn reconstruct_rebuilds_the_lattice() {
    for c in ["filt", "cg", "dh", "gvg", "hg", "urq", "plo"] {
        let (_, text, _) = latdual(&["dual", "--target", c, "N5"]);
        let file = temp_file(&text);
        let (code, out, err) =
            latdual(&["reconstruct", "--from", c, file.path().to_str().unwrap()]);
        assert_eq!(code, 0, "{c}: {err}");
        let rebuilt = parse_lattice(&out).unwrap();
        assert!(
            latdual::app::isomorphic(&rebuilt, &fixtures::pentagon()),
            "{c}"
        );
    }
}

#[test]
fn reconstruct_rejects_invalid_spaces_with_input_error() {
    let file = temp_file(r#"{"category":"plo","points":["p","q"],"relation":[["p","q"]]}"#);
    let (code, _, err) = latdual(&[
        "reconstruct",
        "--from",
        "plo",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("plo.relation-is-reflexive"), "{err}");
}

#[test]
fn reconstruct_checks_the_category() {
    let (_, text, _) = latdual(&["dual", "--target", "urq", "B4"]);
    let file = temp_file(&text);
    let (code, _, err) = latdual(&[
        "reconstruct",
        "--from",
        "plo",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("category"), "{err}");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(
        latdual(&["dual", "--target", "dh", "/no/such/file.json"]).0,
        2
    );
    assert_eq!(latdual(&["dual", "--target", "nowhere", "TWO"]).0, 2);
    assert_eq!(latdual(&["verify", "--max-size", "7"]).0, 2);
    assert_eq!(latdual(&["search", "--x0-vs-xm", "--max-size", "8"]).0, 2);
    assert_eq!(latdual(&["frobnicate"]).0, 2);
    let bad = temp_file("{ not json");
    assert_eq!(
        latdual(&["dual", "--target", "dh", bad.path().to_str().unwrap()]).0,
        2
    );
}

#[test]
fn verify_trivial_size_passes() {
    let (code, out, _) = latdual(&["verify", "--max-size", "1", "--suite", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("roundtrip: 7/7 passed\n"), "{out}");
}

#[test]
fn verify_roundtrip_covers_every_class_and_endpoint() {
    let (code, out, _) = latdual(&["verify", "--max-size", "6", "--suite", "roundtrip"]);
    assert_eq!((code, out.as_str()), (0, "roundtrip: 175/175 passed\n"));
}

#[test]
fn verify_naturality_at_four_passes() {
    assert_eq!(
        latdual(&["verify", "--max-size", "4", "--suite", "naturality"]).0,
        0
    );
}

#[test]
fn verify_reports_are_byte_identical() {
    let args = [
        "verify",
        "--max-size",
        "4",
        "--suite",
        "validators",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let (c1, first, _) = latdual(&args);
    let (c2, second, _) = latdual(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value[0]["suite"], "validators");
    assert!(value[0]["first_failure"].is_null());
}

#[test]
fn search_reports_the_five_element_classes() {
    let (code, out, _) = latdual(&["search", "--x0-vs-xm", "--max-size", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "10 classes checked, inclusion chain confirmed, no strictness witness for X₀ ⊊ X_m\n"
    );
}

#[test]
fn large_bounds_need_the_override() {
    let (code, out, _) = latdual(&["search", "--x0-vs-xm", "--max-size", "7", "--allow-large"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("78 classes checked"));
}
