# Strong minimality classifier
