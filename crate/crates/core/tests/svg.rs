use blocksym::cli::run_from_args;
use blocksym::regions::{HexagonRegion, Region, TrapezoidRegion};
use blocksym::render::{emit_svg, render_svg};
use blocksym::shapes::DentSet;
use blocksym::tilings::{enumerate_tilings, Tiling, DEFAULT_TILING_LIMIT};
use blocksym::Error;

fn lozenge_count(svg: &str) -> usize {
    ["horizontal", "positive", "negative"]
        .iter()
        .map(|c| svg.matches(&format!("class=\"{c}\"")).count())
        .sum()
}

#[test]
fn unique_tiling_of_small_trapezoid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["blocksym", "render", "--trap", "1,1", "--P", "2", "--out", path.to_str().unwrap()];
    assert_eq!(run_from_args(args, &mut out, &mut err), 0, "{}", String::from_utf8_lossy(&err));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(lozenge_count(&svg), 1);
    assert_eq!(svg.matches("class=\"negative\" fill=\"#4a4a4a\"").count(), 1);
    assert_eq!(svg.matches("class=\"dent\"").count(), 1);
}

#[test]
fn hexagon_tilings_have_area_over_two_lozenges() {
    let region: Region = HexagonRegion::new(2, 2, 2).unwrap().into();
    let triangles = region.triangles().len();
    for tiling in enumerate_tilings(&region, DEFAULT_TILING_LIMIT).unwrap() {
        let svg = render_svg(&tiling, &region).unwrap();
        assert_eq!(lozenge_count(&svg), triangles / 2);
        assert_eq!(lozenge_count(&svg), 12);
        assert_eq!(svg.matches("class=\"negative\"").count(), tiling.count(blocksym::lattice::Orientation::Negative));
    }
}

#[test]
fn rendering_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let region: Region =
        TrapezoidRegion::with_right_dents(2, 2, DentSet::new(vec![2, 4]).unwrap()).unwrap().into();
    let tiling = &enumerate_tilings(&region, DEFAULT_TILING_LIMIT).unwrap()[0];
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    emit_svg(tiling, &region, &a).unwrap();
    emit_svg(tiling, &region, &b).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn empty_or_mismatched_requests_are_rejected() {
    let region: Region = HexagonRegion::new(1, 1, 1).unwrap().into();
    assert!(matches!(render_svg(&Tiling::new(Vec::new()), &region), Err(Error::InvalidInput(_))));
    let other: Region = HexagonRegion::new(1, 1, 2).unwrap().into();
    let tiling = &enumerate_tilings(&other, DEFAULT_TILING_LIMIT).unwrap()[0];
    assert!(matches!(render_svg(tiling, &region), Err(Error::InvalidInput(_))));
    let missing = std::path::Path::new("/nonexistent-dir/x.svg");
    let ok = &enumerate_tilings(&region, DEFAULT_TILING_LIMIT).unwrap()[0];
    assert!(matches!(emit_svg(ok, &region, missing), Err(Error::Io(_))));

    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["blocksym", "render", "--hex", "1,1,1", "--index", "5", "--out", "/tmp/unused.svg"];
    assert_eq!(run_from_args(args, &mut out, &mut err), 2);
    assert!(String::from_utf8_lossy(&err).contains("--index"));
}
