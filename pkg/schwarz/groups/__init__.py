# Triangle group signatures
