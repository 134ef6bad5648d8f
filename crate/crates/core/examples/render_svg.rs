//! Writes an SVG picture of one lozenge tiling.

use blocksym::regions::{Region, TrapezoidRegion};
use blocksym::render::render_svg;
use blocksym::shapes::DentSet;
use blocksym::tilings::{enumerate_tilings, DEFAULT_TILING_LIMIT};

fn main() -> blocksym::Result<()> {
    let region: Region = TrapezoidRegion::with_right_dents(4, 3, DentSet::new(vec![1, 4, 6])?)?.into();
    let tilings = enumerate_tilings(&region, DEFAULT_TILING_LIMIT)?;
    let index: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let tiling = tilings
        .get(index)
        .ok_or_else(|| blocksym::Error::InvalidInput(format!("only {} tilings", tilings.len())))?;
    let svg = render_svg(tiling, &region)?;
    let path = std::env::temp_dir().join("blocksym-tiling.svg");
    std::fs::write(&path, &svg)?;
    println!("tiling {index} of {} written to {}", tilings.len(), path.display());
    Ok(())
}
