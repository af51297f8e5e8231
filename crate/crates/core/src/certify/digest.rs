use serde::Serialize;
use sha2::{Digest, Sha256};

/// SHA-256 of the compact JSON serialization, as lowercase hex.
///
/// Struct fields serialize in declaration order and maps used in reports
/// are `BTreeMap`s, so the JSON text is canonical.
pub fn content_digest<T: Serialize + ?Sized>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("report types serialize infallibly");
    hex::encode(Sha256::digest(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable_and_sensitive() {
        let a = content_digest(&vec!["1/2", "3"]);
        assert_eq!(a, content_digest(&vec!["1/2", "3"]));
        assert_ne!(a, content_digest(&vec!["1/2", "4"]));
        assert_eq!(a.len(), 64);
    }
}
