IJavaType type= (IJavaType)pop();
IJavaObject object= (IJavaObject)pop();
