//! Turning flag values like `--H v,a` into vertex sets and admissible
//! pairs, with errors that name the offending flag.

use ultragraph::{AdmissiblePair, SatHereditary, Ultragraph, VertexSet};

/// A flag whose value failed to resolve. Rendered as
/// `--H: unknown vertex `z``, so the user sees which option to fix.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("--{flag}: {message}")]
pub struct FlagError {
    pub flag: &'static str,
    pub message: String,
}

fn err(flag: &'static str, message: impl Into<String>) -> FlagError {
    FlagError { flag, message: message.into() }
}

/// Parses a comma-separated vertex-name list into a set. The empty
/// string denotes the empty set.
pub fn vertex_list(g: &Ultragraph, flag: &'static str, value: &str) -> Result<VertexSet, FlagError> {
    let mut set = VertexSet::EMPTY;
    if value.trim().is_empty() {
        return Ok(set);
    }
    for item in value.split(',') {
        let name = item.trim();
        if name.is_empty() {
            return Err(err(flag, "empty name in list"));
        }
        match g.vertex_by_name(name) {
            Some(v) => set.insert(v.0),
            None => return Err(err(flag, format!("unknown vertex `{name}`"))),
        }
    }
    Ok(set)
}

/// Splits a comma-separated list of fragment member names. Resolution
/// against the quotient happens later, where split vertices like `w'`
/// and edge copies like `e#2` are in scope.
pub fn name_list(value: &str) -> Vec<String> {
    if value.trim().is_empty() {
        return Vec::new();
    }
    value.split(',').map(|s| s.trim().to_string()).collect()
}

/// Resolves `--H`/`--B` (or `--K`/`--S`) values into an admissible
/// pair. `h_flag`/`b_flag` name the flags in error messages.
pub fn admissible_pair(
    g: &Ultragraph,
    h_flag: &'static str,
    h_value: &str,
    b_flag: &'static str,
    b_value: Option<&str>,
) -> Result<AdmissiblePair, FlagError> {
    let h1 = vertex_list(g, h_flag, h_value)?;
    let h = SatHereditary::new(g, h1).map_err(|e| err(h_flag, e.to_string()))?;
    let b = match b_value {
        Some(value) => vertex_list(g, b_flag, value)?,
        None => VertexSet::EMPTY,
    };
    AdmissiblePair::new(g, h, b).map_err(|e| err(b_flag, e.to_string()))
}
