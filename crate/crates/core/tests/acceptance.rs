//! Prints one line per acceptance criterion; exits nonzero if any fails.
//!
//! `HALPHEN_ACCEPTANCE=fast` runs the reduced-scale subset.

use halphen_core::acceptance::{run_all, Mode};
use halphen_core::cache::Cache;

fn main() {
    let mode = match std::env::var("HALPHEN_ACCEPTANCE").as_deref() {
        Ok("fast") => Mode::Fast,
        _ => Mode::Full,
    };
    println!("acceptance ({mode:?})");
    let cache = Cache::memory();
    let results = run_all(mode, &cache, |r| println!("{r}"));
    let failed = results.iter().filter(|r| !r.pass).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
