# Schwarz triangle toolkit
