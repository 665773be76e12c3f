namespace albert {
}
