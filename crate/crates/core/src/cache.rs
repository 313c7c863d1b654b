//! Stored base data. Files in the directory named by `LEAPERFORGE_CACHE`
//! take precedence over the copies built into the library.

use std::path::PathBuf;

use crate::error::Result;

pub const CACHE_ENV: &str = "LEAPERFORGE_CACHE";

pub const CORNER23: &str = "corner23.json";
pub const BASE25_14: &str = "base25_14.txt";
pub const BRICK25: &str = "brick25.json";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
}

/// Contents of `name` in the cache directory, else `builtin`.
pub fn load(name: &str, builtin: &'static str) -> Result<String> {
    if let Some(path) = cache_dir().map(|d| d.join(name)).filter(|p| p.is_file()) {
        return Ok(std::fs::read_to_string(path)?);
    }
    Ok(builtin.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_without_cache() {
        if cache_dir().is_none() {
            assert_eq!(load("missing", "x").unwrap(), "x");
        }
    }
}
