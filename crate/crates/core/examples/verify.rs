//! Runs a few of the built-in verification suites.

use relstab::verify;

fn main() {
    let ids: Vec<u8> = ["maschke", "trace", "ext", "dn"].iter().filter_map(|s| verify::suite_id(s)).collect();
    for r in verify::run_many(&ids) {
        println!("{r}");
    }
}
