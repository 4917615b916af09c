//! Configuration layering: defaults, then the config file, then the
//! `IDEALARITH_CAPS` environment variable, then command-line flags.

use std::path::{Path, PathBuf};

use idealarith::{Caps, Error, Result};
use serde_json::Value;

use crate::report::Format;
use crate::Cli;

pub const CAPS_ENV: &str = "IDEALARITH_CAPS";

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub caps: Caps,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn merge(base: &mut Value, overlay: &Value) {
    if let (Value::Object(b), Value::Object(o)) = (base, overlay) {
        for (k, v) in o {
            b.insert(k.clone(), v.clone());
        }
    }
}

fn read_file(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))?;
    if !v.is_object() {
        return Err(Error::Parse("config file must hold a JSON object".into()));
    }
    Ok(v)
}

/// Resolves the run configuration. `env_caps` is the raw value of
/// `IDEALARITH_CAPS`, passed in so callers control the environment.
pub fn resolve(cli: &Cli, env_caps: Option<&str>) -> Result<RunConfig> {
    let file = match &cli.config {
        Some(p) => read_file(p)?,
        None => Value::Object(Default::default()),
    };
    let mut caps = serde_json::to_value(Caps::default()).expect("caps serialize");
    if let Some(c) = file.get("caps") {
        merge(&mut caps, c);
    }
    if let Some(raw) = env_caps {
        let v: Value =
            serde_json::from_str(raw).map_err(|e| Error::Parse(format!("{CAPS_ENV}: {e}")))?;
        merge(&mut caps, &v);
    }
    let mut caps: Caps =
        serde_json::from_value(caps).map_err(|e| Error::Parse(format!("caps: {e}")))?;
    if let Some(d) = cli.caps_degree {
        caps.max_degree = d;
    }
    if let Some(b) = cli.pattern_budget {
        caps.pattern_budget = b;
    }
    caps.validate()?;

    let seed = match (cli.seed, file.get("seed")) {
        (Some(s), _) => s,
        (None, Some(v)) => v
            .as_u64()
            .ok_or_else(|| Error::Parse("config seed must be a non-negative integer".into()))?,
        (None, None) => 0,
    };
    let format = match (cli.format, file.get("format")) {
        (Some(f), _) => f,
        (None, Some(v)) => serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("config format: {e}")))?,
        (None, None) => Format::Text,
    };
    let out = match (&cli.out, file.get("out")) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(Value::String(s))) => Some(PathBuf::from(s)),
        (None, Some(_)) => return Err(Error::Parse("config out must be a string".into())),
        (None, None) => None,
    };
    Ok(RunConfig {
        caps,
        seed,
        format,
        out,
    })
}
