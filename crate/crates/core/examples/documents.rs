//! Workspace documents, canonical JSON and certificate files.

use relstab::document::{canonical_json, certificate_doc, check_certificate, parse_document, CertificateBundle, Workspace};
use relstab::stable::higman_certificate;

const DOC: &str = r#"{
  "ring": "Z",
  "group": {"family": "cyclic", "params": {"order": 4}},
  "modules": {
    "P": {"gens": 4, "relations": [],
          "action": [[["0","0","0","1"],["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]]]}
  },
  "maps": {}
}"#;

fn main() -> relstab::error::Result<()> {
    println!("{}", canonical_json(DOC)?);
    let ws = Workspace::load(&parse_document(DOC)?, true)?;
    let p = ws.module("P")?;
    let cert = higman_certificate(&p)?.certificate().cloned().expect("a permutation module on a free orbit");
    let bundle = CertificateBundle {
        certificates: vec![certificate_doc("P is weakly projective", &cert, &ws.group_doc)],
    };
    let text = serde_json::to_string(&bundle).expect("serialisable");
    let back: CertificateBundle = serde_json::from_str(&text).expect("round trip");
    println!("certificate re-checks: {:?}", check_certificate(&back.certificates[0])?);
    Ok(())
}
