fn main() {
    println!("polylin");
}
