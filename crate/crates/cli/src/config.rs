use std::fs;
use std::path::Path;

use crate::Failure;

/// Defaults loaded from a plain key=value file. Recognized keys: rank,
/// k, max-length, cap, jobs. Blank lines and `#` comments are skipped;
/// command-line flags override anything set here.
#[derive(Debug, Default, Clone)]
pub struct Config {
    pub rank: Option<usize>,
    pub k: Option<usize>,
    pub max_length: Option<usize>,
    pub cap: Option<usize>,
    pub jobs: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, Failure> {
        let text = fs::read_to_string(path).map_err(|e| {
            Failure::Parse(format!("cannot read config {}: {e}", path.display()))
        })?;
        Config::parse(&text)
    }

    fn parse(text: &str) -> Result<Config, Failure> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Failure::Parse(format!("config line {}: expected key=value", idx + 1))
            })?;
            let key = key.trim();
            let value: usize = value.trim().parse().map_err(|_| {
                Failure::Parse(format!("config line {}: {key} takes an integer", idx + 1))
            })?;
            match key {
                "rank" => cfg.rank = Some(value),
                "k" => cfg.k = Some(value),
                "max-length" | "max_length" => cfg.max_length = Some(value),
                "cap" => cfg.cap = Some(value),
                "jobs" => cfg.jobs = Some(value),
                other => {
                    return Err(Failure::Parse(format!(
                        "config line {}: unknown key {other:?}",
                        idx + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_skips_comments() {
        let cfg = Config::parse("# defaults\nrank = 3\nk=4\n\nmax-length = 6\n").unwrap();
        assert_eq!(cfg.rank, Some(3));
        assert_eq!(cfg.k, Some(4));
        assert_eq!(cfg.max_length, Some(6));
        assert_eq!(cfg.cap, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Config::parse("depth=2").is_err());
        assert!(Config::parse("rank=high").is_err());
        assert!(Config::parse("just a line").is_err());
    }
}
