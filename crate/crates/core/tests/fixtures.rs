use stairtab::shapes::{Partition, SkewShape};
use stairtab::symfunc::{schur_skew_poly, yamanouchi_coeff_table, MultiPoly, TermJson};
use stairtab::tableaux::{GstTableau, IndexSet, QTableau, TableauJson};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap() + "\n"
}

fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(
        Partition::new(outer.to_vec()).unwrap(),
        Partition::new(inner.to_vec()).unwrap(),
    )
    .unwrap()
}

#[test]
fn gst_golden() {
    let text = fixture("gst_tie.json");
    let parsed: TableauJson = serde_json::from_str(&text).unwrap();
    let t = GstTableau::from_json(&parsed).unwrap();
    assert!(t.is_valid(&IndexSet::empty(1)));
    let built = GstTableau::from_triples(&[2, 1], &[1], &[(1, 2, 1), (2, 1, 1)]).unwrap();
    assert_eq!(t, built);
    assert_eq!(line(&built.to_json()), text);
}

#[test]
fn qtab_golden() {
    let text = fixture("qtab_21.json");
    let parsed: TableauJson = serde_json::from_str(&text).unwrap();
    let t = QTableau::from_json(&parsed).unwrap();
    assert!(t.is_valid(&IndexSet::empty(2)));
    let built = QTableau::from_tuples(
        &[2, 1],
        &[],
        &[(1, 1, 1, true), (1, 2, 1, false), (2, 1, 2, true)],
    )
    .unwrap();
    assert_eq!(t, built);
    assert_eq!(line(&built.to_json()), text);
    assert!(GstTableau::from_json(&parsed).is_err());
}

#[test]
fn schur_golden() {
    let text = fixture("schur_2_m2.json");
    let p = schur_skew_poly(&shape(&[2], &[]), 2).unwrap();
    assert_eq!(line(&p.to_json()), text);
    let terms: Vec<TermJson> = serde_json::from_str(&text).unwrap();
    assert_eq!(MultiPoly::from_json(2, &terms).unwrap(), p);
}

#[test]
fn yamanouchi_golden() {
    let table = yamanouchi_coeff_table(&shape(&[1, 1], &[]), 2).unwrap();
    assert_eq!(line(&table.to_json()), fixture("yamanouchi_11_m2.json"));
}
