//! Library surface of the CLI: interchange formats and the report schema.

pub mod format;
pub mod report;

use fullerene::error::Result;
use fullerene::{dodecahedron, leapfrog, FullereneGraph};

/// Resolves a fixture name: `dodecahedron` or `leapfrog^k` (k >= 1 leapfrog
/// iterations starting from the dodecahedron; bare `leapfrog` means k = 1).
pub fn fixture(name: &str) -> Result<FullereneGraph> {
    let bad = || fullerene::Error::ParseError {
        line: 0,
        message: format!("unknown fixture '{name}' (expected dodecahedron or leapfrog^k)"),
    };
    if name == "dodecahedron" {
        return Ok(dodecahedron());
    }
    let k: u32 = if name == "leapfrog" {
        1
    } else {
        let rest = name.strip_prefix("leapfrog^").ok_or_else(bad)?;
        rest.parse().map_err(|_| bad())?
    };
    let mut g = dodecahedron();
    for _ in 0..k {
        g = leapfrog(&g);
    }
    Ok(g)
}
