//! The shipped JSON schemas must match the in-code parameter schemas.
//! Set `OCLAB_BLESS=1` to rewrite them.

use std::path::PathBuf;

use oclab::harness::{json_schema, Scenario};

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

#[test]
fn shipped_schemas_are_current() {
    let bless = std::env::var_os("OCLAB_BLESS").is_some();
    for s in Scenario::ALL {
        let path = schema_dir().join(format!("{s}.json"));
        let expected = json_schema(s);
        if bless {
            std::fs::write(&path, serde_json::to_string_pretty(&expected).unwrap() + "\n").unwrap();
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let shipped: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(shipped, expected, "{} is stale; rerun with OCLAB_BLESS=1", path.display());
    }
}
