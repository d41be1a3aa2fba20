namespace towercoh {}
