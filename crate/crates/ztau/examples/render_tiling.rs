//! Render a patch of the Fibonacci tiling to SVG, with the small
//! Pythagorean triple marked on it.
//!
//! Run with: cargo run -p ztau --example render_tiling

use ztau::render::{render_svg, RenderSpec};
use ztau::ring::RingElement;

fn main() {
    let mut spec = RenderSpec::new(2);
    spec.markers = vec![
        (RingElement::new(1, 2), "x = 1+2t".to_string()),
        (RingElement::new(2, 4), "y = 2+4t".to_string()),
        (RingElement::new(3, 4), "z = 3+4t".to_string()),
    ];
    let svg = render_svg(&spec).unwrap();
    let path = std::env::temp_dir().join("fibonacci_patch.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {} bytes to {}", svg.len(), path.display());
}
