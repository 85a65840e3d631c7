//! Parse a scene file and write it as SVG.
//!
//! ```text
//! cargo run --example scene_render -- scenes/midpoint.scene midpoint.svg
//! ```

use harmonic_plane::render::{render_svg, RenderOptions};
use harmonic_plane::scene::parse_scene;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/scenes/worked_example.scene").into());
    let text = std::fs::read_to_string(&input)?;
    let scene = parse_scene(&text)?;
    for (name, p) in scene.points() {
        println!("{name:>3} = {p}");
    }
    for (name, l) in scene.lines() {
        println!("{name:>3} = {l}");
    }

    let rendered = render_svg(&scene, &RenderOptions::default());
    for w in &rendered.warnings {
        eprintln!("warning: {w}");
    }
    match args.next() {
        Some(out) => {
            std::fs::write(&out, &rendered.svg)?;
            println!("wrote {out}");
        }
        None => print!("{}", rendered.svg),
    }
    Ok(())
}
