//! Run every identity check once with small parameters and print the JSON reports.

use qharmonic::compositions::Composition;
use qharmonic::verify::{check_identity, IdentityId, Params};

fn main() {
    let s: Composition = "2,1".parse().unwrap();
    for &id in IdentityId::ALL {
        let p = Params::new()
            .s(s.clone())
            .n(4)
            .m(2)
            .k(2)
            .ab(2, 3)
            .big_n(30)
            .samples(5);
        match check_identity(id, &p) {
            Ok(r) => println!("{}", serde_json::to_string(&r).unwrap()),
            Err(e) => eprintln!("{id}: {e}"),
        }
    }
}
