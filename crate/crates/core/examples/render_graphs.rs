//! DOT and JSON renderings of a path and a resolution trace.
//!
//! $ cargo run --example render_graphs | dot -Tsvg > trace.svg

use cuspval::render::{emit_json, path_json, trace_dot};
use cuspval::{positive_path, resolve, MonomialValuation};

fn main() -> cuspval::Result<()> {
    let path = positive_path(&MonomialValuation::integral(3, 2)?, 64)?;
    eprint!("{}", emit_json(&path_json(&path)));
    print!("{}", trace_dot(&resolve(24, 7)?));
    Ok(())
}
