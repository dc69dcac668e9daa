use serde::Deserialize;
use std::path::Path;

pub const ENUM_CAP_ENV: &str = "QRM_ENUM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Md,
    Json,
}

/// Effective settings after layering defaults, the config file, the
/// environment and command-line flags (later wins).
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub enumeration_cap: u32,
    pub leader_cap: u32,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            enumeration_cap: 26,
            leader_cap: 16,
            output_format: OutputFormat::Csv,
            seed: 1,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    enumeration_cap: Option<u32>,
    leader_cap: Option<u32>,
    format: Option<OutputFormat>,
    seed: Option<u64>,
}

#[derive(Debug, Default)]
pub struct Overrides {
    pub enumeration_cap: Option<u32>,
    pub leader_cap: Option<u32>,
    pub seed: Option<u64>,
}

fn positive(name: &str, v: u32) -> Result<u32, String> {
    if v == 0 {
        Err(format!("{name} must be positive"))
    } else {
        Ok(v)
    }
}

impl CliConfig {
    pub fn resolve(
        file: Option<&Path>,
        env_cap: Option<String>,
        flags: &Overrides,
    ) -> Result<Self, String> {
        let mut cfg = CliConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("reading {}: {e}", path.display()))?;
            let parsed: FileConfig =
                toml::from_str(&text).map_err(|e| format!("parsing {}: {e}", path.display()))?;
            if let Some(v) = parsed.enumeration_cap {
                cfg.enumeration_cap = positive("enumeration_cap", v)?;
            }
            if let Some(v) = parsed.leader_cap {
                cfg.leader_cap = positive("leader_cap", v)?;
            }
            if let Some(v) = parsed.format {
                cfg.output_format = v;
            }
            if let Some(v) = parsed.seed {
                cfg.seed = v;
            }
        }
        if let Some(raw) = env_cap {
            let v = raw
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("{ENUM_CAP_ENV}={raw:?} is not a positive integer"))?;
            cfg.enumeration_cap = positive(ENUM_CAP_ENV, v)?;
        }
        if let Some(v) = flags.enumeration_cap {
            cfg.enumeration_cap = v;
        }
        if let Some(v) = flags.leader_cap {
            cfg.leader_cap = v;
        }
        if let Some(v) = flags.seed {
            cfg.seed = v;
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn layering_order() {
        let mut file = tempfile();
        writeln!(
            file.1,
            "enumeration_cap = 20\nleader_cap = 8\nseed = 5\nformat = \"md\""
        )
        .unwrap();
        let cfg = CliConfig::resolve(Some(&file.0), None, &Overrides::default()).unwrap();
        assert_eq!(
            cfg,
            CliConfig {
                enumeration_cap: 20,
                leader_cap: 8,
                output_format: OutputFormat::Md,
                seed: 5
            }
        );
        let cfg =
            CliConfig::resolve(Some(&file.0), Some("12".into()), &Overrides::default()).unwrap();
        assert_eq!(cfg.enumeration_cap, 12);
        let flags = Overrides {
            enumeration_cap: Some(3),
            ..Default::default()
        };
        let cfg = CliConfig::resolve(Some(&file.0), Some("12".into()), &flags).unwrap();
        assert_eq!(cfg.enumeration_cap, 3);
        std::fs::remove_file(&file.0).unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        assert!(CliConfig::resolve(None, Some("zero".into()), &Overrides::default()).is_err());
        assert!(CliConfig::resolve(None, Some("0".into()), &Overrides::default()).is_err());
        let mut file = tempfile();
        writeln!(file.1, "bogus = 1").unwrap();
        assert!(CliConfig::resolve(Some(&file.0), None, &Overrides::default()).is_err());
        std::fs::remove_file(&file.0).unwrap();
    }

    fn tempfile() -> (std::path::PathBuf, std::fs::File) {
        let path = std::env::temp_dir().join(format!(
            "qrm-config-{}-{:?}.toml",
            std::process::id(),
            std::thread::current().id()
        ));
        let f = std::fs::File::create(&path).unwrap();
        (path, f)
    }
}
