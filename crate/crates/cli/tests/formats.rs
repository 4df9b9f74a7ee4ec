//! Round-trip and error-path tests for the interchange formats and the
//! report document.

use fullerene::error::Error;
use fullerene::{analyze, dodecahedron, leapfrog, AnalyzeOptions, PlanarGraph};
use fullerene_cli::format::{
    emit_planar_code, emit_rotation_text, parse_auto, parse_planar_code,
    parse_rotation_text, PLANAR_CODE_HEADER,
};
use fullerene_cli::report::ReportDocument;

fn same_rotation(a: &PlanarGraph, b: &PlanarGraph) {
    assert_eq!(a.vertex_count(), b.vertex_count());
    for v in 0..a.vertex_count() {
        assert_eq!(a.rotation_neighbors(v), b.rotation_neighbors(v));
    }
}

#[test]
fn planar_code_round_trip_multi_graph() {
    let g20 = dodecahedron();
    let g60 = leapfrog(&g20);
    let graphs = [g20.graph(), g60.graph(), g20.graph()];
    let bytes = emit_planar_code(&graphs).unwrap();
    assert!(bytes.starts_with(PLANAR_CODE_HEADER));
    let parsed = parse_planar_code(&bytes).unwrap();
    assert_eq!(parsed.len(), 3);
    for (orig, back) in graphs.iter().zip(&parsed) {
        same_rotation(orig, back);
    }
    // The header is optional on input.
    let headerless = &bytes[PLANAR_CODE_HEADER.len()..];
    assert_eq!(parse_planar_code(headerless).unwrap().len(), 3);
}

#[test]
fn planar_code_rejects_truncation_and_bad_neighbors() {
    let bytes = emit_planar_code(&[dodecahedron().graph()]).unwrap();
    let cut = &bytes[..bytes.len() - 5];
    assert!(matches!(parse_planar_code(cut), Err(Error::TruncatedRecord(_))));
    // n=2 but a neighbor byte of 3.
    let bad = [2u8, 3, 0, 1, 0];
    assert!(matches!(
        parse_planar_code(&bad),
        Err(Error::NeighborOutOfRange { value: 3, max: 2 })
    ));
}

#[test]
fn planar_code_rejects_large_graphs_on_emit() {
    let g = leapfrog(&leapfrog(&leapfrog(&dodecahedron()))); // 540 vertices
    assert!(matches!(
        emit_planar_code(&[g.graph()]),
        Err(Error::UnsupportedVertexCount(540))
    ));
}

#[test]
fn rotation_text_round_trip() {
    let g = leapfrog(&dodecahedron());
    let text = emit_rotation_text(g.graph());
    let back = parse_rotation_text(&text).unwrap();
    same_rotation(g.graph(), &back);
}

#[test]
fn rotation_text_reports_line_numbers() {
    let text = "# comment\n0: 1 2\n1: 0 2\nbroken line\n2: 0 1\n";
    match parse_rotation_text(text) {
        Err(Error::ParseError { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected ParseError, got {other:?}"),
    }
    let dup = "0: 1\n0: 1\n";
    assert!(matches!(parse_rotation_text(dup), Err(Error::ParseError { line: 2, .. })));
}

#[test]
fn auto_detection_handles_both_formats() {
    let g = dodecahedron();
    let pc = emit_planar_code(&[g.graph()]).unwrap();
    let txt = emit_rotation_text(g.graph());
    same_rotation(g.graph(), &parse_auto(&pc).unwrap()[0]);
    same_rotation(g.graph(), &parse_auto(txt.as_bytes()).unwrap()[0]);
}

#[test]
fn report_document_survives_json_round_trip() {
    let g = leapfrog(&dodecahedron());
    let opts = AnalyzeOptions { exact_count: true, ..AnalyzeOptions::default() };
    let report = analyze(&g, &opts).unwrap();
    let doc = ReportDocument::from(&report);
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.p, 60);
    assert_eq!(doc.exact_count.as_deref(), Some("12500"));
    let json = serde_json::to_string(&doc).unwrap();
    let back: ReportDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(back.p, doc.p);
    assert_eq!(back.switch_count, doc.switch_count);
    assert_eq!(back.exact_count, doc.exact_count);
    assert_eq!(back.bounds.zz, 47);
    // Text rendering mentions every headline figure.
    let text = doc.to_text();
    assert!(text.contains("p: 60"));
    assert!(text.contains("exact_count: 12500"));
    assert!(text.contains("zz=47"));
}
