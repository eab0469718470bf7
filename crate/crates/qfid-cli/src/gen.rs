//! `qfid gen`: write random density-matrix files.

use qfid::states::{generate_family, FamilyStates, StateFamily};
use qfid::{matfile, Result};
use std::path::{Path, PathBuf};

/// `out.mat` -> `out_a.mat`; `out` -> `out_a`.
fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

pub fn run(family: &str, dim: usize, rank: Option<usize>, seed: u64, out: &Path) -> Result<i32> {
    let family: StateFamily = family.parse()?;
    match generate_family(family, dim, rank, seed)? {
        FamilyStates::Single(state) => {
            matfile::write_matrix_to_path(out, state.matrix())?;
            println!("wrote {}", out.display());
        }
        FamilyStates::Pair(a, b) => {
            for (suffix, state) in [("a", &a), ("b", &b)] {
                let path = with_suffix(out, suffix);
                matfile::write_matrix_to_path(&path, state.matrix())?;
                println!("wrote {}", path.display());
            }
        }
    }
    Ok(0)
}
